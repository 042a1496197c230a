import pytest

from hopfcert.corpus import builtin
from hopfcert.hopf import (
    HopfData,
    antipode_apply,
    counit_apply,
    multiply,
    pair_functionals,
    tensor_contract,
)
from hopfcert.integrals import (
    MalformedHopfAlgebra,
    NotSemisimple,
    find_integral,
    left_integral_space,
    nu_tensor,
)

from conftest import CORPUS, GROUPS, algebra


def test_integral_examples():
    C2 = builtin("C2")
    assert find_integral(C2) == C2.element([1, 1])
    S3 = builtin("S3")
    assert find_integral(S3) == S3.element([1] * 6)
    C2D = builtin("C2", dual=True)
    assert find_integral(C2D) == C2D.element([2, 0])


def test_nu_examples():
    C2 = builtin("C2")
    assert nu_tensor(C2, find_integral(C2)) == C2.tensor({(0, 0): 1, (1, 1): 1})
    C2D = builtin("C2", dual=True)
    assert nu_tensor(C2D, find_integral(C2D)) == C2D.tensor({(0, 0): 2, (1, 1): 2})


@pytest.mark.parametrize("name", GROUPS)
def test_nu_of_group_algebra_is_sum_g_ginv(name):
    from hopfcert.corpus import BUILTIN_GROUPS
    T = BUILTIN_GROUPS[name]()
    H = algebra(name)
    expected = H.tensor({(g, T.inverse[g]): 1 for g in range(T.order)})
    assert nu_tensor(H, find_integral(H)) == expected


@pytest.mark.parametrize("name", CORPUS)
def test_integral_invariants(name):
    H = algebra(name)
    assert len(left_integral_space(H)) == 1
    lam = find_integral(H)
    n = H.dim
    assert counit_apply(H, lam) == n
    assert antipode_apply(H, lam) == lam
    for i in range(n):
        h = H.basis(i)
        assert multiply(H, h, lam) == lam.scale(H.counit[i]) == multiply(H, lam, h)
    nu = nu_tensor(H, lam)
    assert pair_functionals(nu, H.counit, H.counit) == n
    assert tensor_contract(H, nu) == H.unit_element().scale(n)


def test_sweedler_is_not_semisimple(sweedler):
    assert len(left_integral_space(sweedler)) == 1
    with pytest.raises(NotSemisimple):
        find_integral(sweedler)


def test_malformed_integral_space():
    # the zero "multiplication" makes every vector an integral
    H = builtin("C2")
    z = H.zero
    zero_mul = tuple(tuple((z, z) for _ in range(2)) for _ in range(2))
    bad = HopfData(2, H.conductor, zero_mul, H.comul, H.antipode, H.counit, H.unit)
    with pytest.raises(MalformedHopfAlgebra):
        find_integral(bad)
