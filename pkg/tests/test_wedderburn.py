from fractions import Fraction

import pytest

from hopfcert import linalg
from hopfcert.corpus import BUILTIN_GROUPS, builtin, cyclic, group_algebra, quaternion8
from hopfcert.hopf import Element, multiply
from hopfcert.scalars import Cyc, zeta
from hopfcert.wedderburn import (
    Character,
    ModuleSearchFailed,
    SplittingFieldTooSmall,
    center_basis,
    centrality_certificate,
    char_inner_product,
    decompose_center,
    idempotent_from_character,
    minimal_polynomial,
    simple_module,
    simple_module_matrices,
)

from conftest import CORPUS, GROUPS, algebra, analyse
from oracles import degree_oracle, s3_two_dim_character

S3_TABLE = BUILTIN_GROUPS["S3"]()
# sorted permutations of (0, 1, 2): id, (12), (01), 3-cycle, 3-cycle, (02)
THREE_CYCLES = [3, 4]
TRANSPOSITIONS = [1, 2, 5]


def in_span(vectors, v):
    return linalg.rank([list(u.coeffs) for u in vectors] + [list(v.coeffs)]) == len(vectors)


def test_center_dimensions():
    S3 = algebra("S3")
    Z = center_basis(S3)
    assert len(Z) == 3
    for cls in S3_TABLE.conjugacy_classes():
        assert in_span(Z, S3.element([1 if g in cls else 0 for g in range(6)]))
    assert len(center_basis(algebra("C2_dual"))) == 2
    assert len(center_basis(algebra("Q8"))) == 5


@pytest.mark.parametrize("name", GROUPS)
def test_center_dimension_is_class_count(name):
    assert len(center_basis(algebra(name))) == len(BUILTIN_GROUPS[name]().conjugacy_classes())


def test_decompose_c2():
    H = algebra("C2")
    blocks = decompose_center(H)
    h = Fraction(1, 2)
    assert [b.idempotent for b in blocks] == [H.element([h, -h]), H.element([h, h])]
    assert [b.degree for b in blocks] == [1, 1]


def test_decompose_c3_matches_fourier_inversion():
    H = algebra("C3")
    w = zeta(3)
    expected = [
        H.element([Fraction(1, 3) * (w ** (-j * m)) for j in range(3)]) for m in range(3)
    ]
    got = [b.idempotent for b in decompose_center(H)]
    assert sorted(got, key=lambda e: e.sort_key()) == sorted(expected, key=lambda e: e.sort_key())


@pytest.mark.parametrize("name", GROUPS)
def test_degrees_match_brute_force_oracle(name):
    T = BUILTIN_GROUPS[name]()
    assert [b.degree for b in analyse(name).blocks] == degree_oracle(T.table)


@pytest.mark.parametrize("name", GROUPS)
def test_dual_group_algebras_are_commutative_split(name):
    blocks = analyse(name + "_dual").blocks
    assert [b.degree for b in blocks] == [1] * algebra(name).dim


def test_char_inner_product_c2():
    a = analyse("C2")
    sgn, triv = a.blocks[0].character, a.blocks[1].character
    assert char_inner_product(a.H, a.lam, triv, sgn) == 0
    assert char_inner_product(a.H, a.lam, sgn, sgn) == 1


def test_idempotent_from_character_c2():
    a = analyse("C2")
    h = Fraction(1, 2)
    triv = Character(tuple(a.H.scalar(1) for _ in range(2)), 1)
    sgn = Character((a.H.scalar(1), a.H.scalar(-1)), 1)
    assert idempotent_from_character(a.H, a.nu, triv) == a.H.element([h, h])
    assert idempotent_from_character(a.H, a.nu, sgn) == a.H.element([h, -h])


def test_idempotent_from_character_s3_two_dim():
    a = analyse("S3")
    chi_vals = s3_two_dim_character(S3_TABLE.table)
    assert chi_vals == [2, 0, 0, -1, -1, 0]
    chi = Character(tuple(a.H.scalar(v) for v in chi_vals), 2)
    # (2/6) sum_g chi(g) g^-1, expanded by hand
    inv = S3_TABLE.inverse
    expected = [Fraction(0)] * 6
    for g in range(6):
        expected[inv[g]] += Fraction(2, 6) * chi_vals[g]
    z = idempotent_from_character(a.H, a.nu, chi)
    assert z == a.H.element(expected)
    assert z == a.H.element([Fraction(2, 3), 0, 0, Fraction(-1, 3), Fraction(-1, 3), 0])
    assert a.blocks[2].character == chi


def test_centrality_certificate_examples():
    H = algebra("S3")
    cyc_sum = H.element([1 if g in THREE_CYCLES else 0 for g in range(6)])
    assert centrality_certificate(H, cyc_sum).passed
    rep = centrality_certificate(H, H.basis(TRANSPOSITIONS[0]))
    assert not rep.commutes_passed
    w = rep.commutes_witness
    t = H.basis(TRANSPOSITIONS[0])
    assert multiply(H, t, H.basis(w)) != multiply(H, H.basis(w), t)


@pytest.mark.parametrize("name", CORPUS)
def test_reconstruction_and_centrality(name):
    a = analyse(name)
    for b in a.blocks:
        z = idempotent_from_character(a.H, a.nu, b.character)
        assert z == b.idempotent
        assert centrality_certificate(a.H, z).passed


@pytest.mark.parametrize("name", CORPUS)
def test_block_invariants(name):
    a = analyse(name)
    H = a.H
    total = H.zero_element()
    for i, b in enumerate(a.blocks):
        e = b.idempotent
        total = total + e
        assert multiply(H, e, e) == e
        for j, c in enumerate(a.blocks):
            if i != j:
                assert multiply(H, e, c.idempotent).is_zero()
        left = [list(multiply(H, e, H.basis(k)).coeffs) for k in range(H.dim)]
        assert linalg.rank(left) == b.degree ** 2
        # chi(1) = k via the unit vector
        one = H.unit_element()
        assert sum((c * v for c, v in zip(one.coeffs, b.character.values)), H.zero) == b.degree
    assert total == H.unit_element()
    assert sum(b.degree ** 2 for b in a.blocks) == H.dim


@pytest.mark.parametrize("name", CORPUS)
def test_orthonormality(name):
    a = analyse(name)
    gram = [[char_inner_product(a.H, a.lam, x.character, y.character, a.nu)
             for y in a.blocks] for x in a.blocks]
    m = len(a.blocks)
    assert gram == linalg.identity(m, a.H.conductor)


@pytest.mark.parametrize("name", CORPUS)
def test_trace_property(name):
    a = analyse(name)
    H = a.H
    for b in a.blocks:
        chi = b.character.values
        for i in range(H.dim):
            for j in range(H.dim):
                ab = multiply(H, H.basis(i), H.basis(j))
                ba = multiply(H, H.basis(j), H.basis(i))
                val = lambda v: sum((c * x for c, x in zip(v.coeffs, chi) if c), H.zero)
                assert val(ab) == val(ba)


def test_minimal_polynomial_of_class_sum():
    H = algebra("S3")
    c3 = H.element([1 if g in THREE_CYCLES else 0 for g in range(6)])
    # central character values 2, 2, -1 on the 3-cycle class: (x - 2)(x + 1)
    assert minimal_polynomial(H, c3) == [H.scalar(-2), H.scalar(-1), H.one]


def test_splitting_field_too_small():
    H = group_algebra(cyclic(3), conductor=1)
    with pytest.raises(SplittingFieldTooSmall):
        decompose_center(H)


def test_module_search_fails_for_quaternions_over_q():
    # center splits over Q, but the 2-dimensional block is a division algebra
    H = group_algebra(quaternion8(), conductor=1)
    blocks = decompose_center(H)
    assert [b.degree for b in blocks] == [1, 1, 1, 1, 2]
    with pytest.raises(ModuleSearchFailed):
        simple_module(H, blocks[-1])


@pytest.mark.parametrize("name", CORPUS)
def test_simple_modules(name):
    a = analyse(name)
    H = a.H
    for b in a.blocks:
        mats = simple_module_matrices(H, b)
        k = b.degree
        assert len(mats) == H.dim and all(len(m) == k for m in mats)
        for j, m in enumerate(mats):
            assert linalg.trace(m) == b.character[j]
        unit = H.unit_element()
        rho_one = [[sum((u * mats[i][r][s] for i, u in enumerate(unit.coeffs) if u), H.zero)
                    for s in range(k)] for r in range(k)]
        assert rho_one == linalg.identity(k, H.conductor)
        if k == 1:
            assert [m[0][0] for m in mats] == list(b.character.values)


def test_simple_module_is_a_representation_s3():
    a = analyse("S3")
    H = a.H
    mats = simple_module_matrices(H, a.blocks[2])
    oracle = s3_two_dim_character(S3_TABLE.table)
    assert [linalg.trace(m) for m in mats] == [H.scalar(v) for v in oracle]
    for i in range(6):
        for j in range(6):
            k = S3_TABLE.table[i][j]
            assert linalg.matmul(mats[i], mats[j]) == [list(r) for r in mats[k]]
