"""Wedderburn data of a split semisimple Hopf algebra.

Blocks are found by splitting the center with a primitive central element;
characters come from traces in the regular representation, so no module is
built unless ``simple_module`` is asked for one.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from . import linalg, polys
from .hopf import (
    Element,
    HopfData,
    TensorSquare,
    antipode_apply,
    left_functional,
    multiply,
    pair_functionals,
    regular_trace,
)
from .integrals import find_integral, nu_tensor
from .scalars import Cyc, zeta


class SplittingFieldTooSmall(ValueError):
    pass


class ModuleSearchFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class Character:
    values: tuple[Cyc, ...]
    degree: int

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class BlockData:
    idempotent: Element
    degree: int
    character: Character


def center_basis(H: HopfData) -> list[Element]:
    """Basis of the center, from the nullspace of z x_j - x_j z = 0."""
    n = H.dim
    rows = []
    for j in range(n):
        for k in range(n):
            row = [H.mul[i][j][k] - H.mul[j][i][k] for i in range(n)]
            if any(row):
                rows.append(row)
    return [Element(tuple(v)) for v in linalg.nullspace(rows, n, H.conductor)]


def _powers(H: HopfData, z: Element, count: int) -> list[Element]:
    out = [H.unit_element()]
    for _ in range(count - 1):
        out.append(multiply(H, out[-1], z))
    return out


def minimal_polynomial(H: HopfData, z: Element, bound: int | None = None) -> list[Cyc]:
    """Monic minimal polynomial of z, lowest coefficient first."""
    bound = bound or H.dim
    pw = [H.unit_element()]
    while len(pw) <= bound:
        nxt = multiply(H, pw[-1], z) if len(pw) > 1 else z
        cols = [list(p.coeffs) for p in pw]
        a = linalg.transpose(cols)
        sol = linalg.solve(a, list(nxt.coeffs))
        if sol is not None:
            return [-c for c in sol] + [H.one]
        pw.append(nxt)
    raise ValueError("minimal polynomial degree exceeds bound")  # pragma: no cover


def _primitive_central_element(H: HopfData, center: list[Element], seed: int = 0,
                               tries: int = 200) -> tuple[Element, list[Cyc]]:
    c = len(center)

    def candidates():
        yield from center
        rng = random.Random(seed)
        for t in range(tries):
            # c distinct eigenvalues are likely once the range is ~c^2 wide
            bound = max(2, c * c) + t
            coeffs = [rng.randint(-bound, bound) for _ in range(c)]
            z = H.zero_element()
            for a, v in zip(coeffs, center):
                if a:
                    z = z + v.scale(a)
            yield z

    for z in candidates():
        if z.is_zero():
            continue
        f = minimal_polynomial(H, z, c)
        if len(f) - 1 == c:
            return z, f
    raise SplittingFieldTooSmall(
        f"no primitive central element after {tries} tries; the center may not split "
        f"over Q(zeta_{H.conductor})"
    )


def _block_sort_key(b: BlockData):
    return (b.degree, b.idempotent.sort_key())


def trace_form(H: HopfData) -> list[list[Cyc]]:
    """T[a][j] = trace of left multiplication by x_a x_j."""
    n = H.dim
    t = H.regular_trace_vector
    out = []
    for a in range(n):
        row = []
        for j in range(n):
            acc = H.zero
            for k, c in H.mul_table[a][j]:
                if t[k]:
                    acc = acc + c * t[k]
            row.append(acc)
        out.append(row)
    return out


def character_of_idempotent(H: HopfData, e: Element, degree: int, form=None) -> Character:
    """chi(x_j) = tr_regular(e x_j) / degree."""
    form = form or trace_form(H)
    vals = []
    for j in range(H.dim):
        acc = H.zero
        for a, ea in enumerate(e.coeffs):
            if ea and form[a][j]:
                acc = acc + ea * form[a][j]
        vals.append(acc / degree)
    return Character(tuple(vals), degree)


def decompose_center(H: HopfData, seed: int = 0) -> list[BlockData]:
    """Primitive central idempotents with their degrees and characters."""
    center = center_basis(H)
    z, f = _primitive_central_element(H, center, seed)
    try:
        roots = polys.roots_in_field(f, H.conductor)
    except polys.NotSplit as exc:
        raise SplittingFieldTooSmall(f"center does not split: {exc}") from exc
    powers = _powers(H, z, len(f) - 1)
    form = trace_form(H)
    blocks = []
    for i, lam in enumerate(roots):
        lag = [H.one]
        for j, mu in enumerate(roots):
            if j != i:
                lag = polys.scale(polys.mul(lag, [-mu, H.one]), (lam - mu).inverse())
        e = H.zero_element()
        for c, p in zip(lag, powers):
            if c:
                e = e + p.scale(c)
        tr = regular_trace(H, e)
        if not tr.is_rational() or tr.to_fraction().denominator != 1 or tr.to_fraction() < 1:
            raise SplittingFieldTooSmall(f"block {i}: regular trace {tr} is not a positive integer")
        dim_block = int(tr.to_fraction())
        k = math.isqrt(dim_block)
        if k * k != dim_block:
            raise SplittingFieldTooSmall(
                f"block {i}: dim e_i H = {dim_block} is not a perfect square"
            )
        blocks.append(BlockData(e, k, character_of_idempotent(H, e, k, form)))
    blocks.sort(key=_block_sort_key)
    return blocks


def char_inner_product(H: HopfData, lam: Element, chi: Character, eta: Character,
                       nu: TensorSquare | None = None) -> Cyc:
    """(1/n) (chi (x) eta)(nu), nu built from the integral lam."""
    nu = nu if nu is not None else nu_tensor(H, lam)
    return pair_functionals(nu, chi.values, eta.values) / H.dim


def idempotent_from_character(H: HopfData, nu: TensorSquare, chi: Character) -> Element:
    """z = (k/n) (chi (x) Id)(nu)."""
    return left_functional(H, nu, chi.values).scale(H.scalar(chi.degree) / H.dim)


@dataclass(frozen=True)
class CentralityReport:
    twisted_passed: bool
    twisted_witness: int | None
    commutes_passed: bool
    commutes_witness: int | None

    @property
    def passed(self) -> bool:
        return self.twisted_passed and self.commutes_passed


def centrality_certificate(H: HopfData, z: Element) -> CentralityReport:
    """Check sum S(h_2) z h_1 = eps(h) z and z h = h z on every basis element h."""
    twisted_witness = commutes_witness = None
    for i in range(H.dim):
        h = H.basis(i)
        acc = H.zero_element()
        for j, k, c in H.comul_table[i]:
            left = antipode_apply(H, H.basis(k))
            acc = acc + multiply(H, multiply(H, left, z), H.basis(j)).scale(c)
        if twisted_witness is None and acc != z.scale(H.counit[i]):
            twisted_witness = i
        if commutes_witness is None and multiply(H, z, h) != multiply(H, h, z):
            commutes_witness = i
    return CentralityReport(twisted_witness is None, twisted_witness,
                            commutes_witness is None, commutes_witness)


@dataclass(frozen=True)
class Lemma1Result:
    block: BlockData
    reconstructed: Element

    @property
    def match(self) -> bool:
        return self.reconstructed == self.block.idempotent


def lemma1_equivalence(H: HopfData, blocks=None, nu=None) -> list[Lemma1Result]:
    """Rebuild each block idempotent from its character through nu."""
    blocks = blocks if blocks is not None else decompose_center(H)
    nu = nu if nu is not None else nu_tensor(H, find_integral(H))
    return [Lemma1Result(b, idempotent_from_character(H, nu, b.character)) for b in blocks]


# -- explicit simple modules --------------------------------------------------------

@dataclass(frozen=True)
class SimpleModule:
    """A minimal left ideal H w with a chosen basis and the action matrices.

    ``matrices[j][r][s]`` is the coefficient of basis[r] in x_j . basis[s].
    """

    generator: Element
    basis: tuple[Element, ...]
    matrices: tuple

    @property
    def degree(self) -> int:
        return len(self.basis)


def _independent_subset(vectors: list[Element]) -> list[Element]:
    chosen: list[Element] = []
    for v in vectors:
        if v.is_zero():
            continue
        if linalg.rank([list(u.coeffs) for u in chosen + [v]]) == len(chosen) + 1:
            chosen.append(v)
    return chosen


def _module_candidates(H: HopfData, span: list[Element]):
    yield from span
    rational = [H.scalar(c) for c in (1, -1, 2, -2)]
    root = zeta(H.conductor) if H.conductor > 2 else None
    irrational = []
    if root is not None:
        p = root
        while p != H.one:
            irrational.extend([p, -p])
            p = p * root
    for coeffs in (rational, irrational):
        for a, b in itertools.combinations(range(len(span)), 2):
            for c in coeffs:
                yield span[a] + span[b].scale(c)
    for a, b, c in itertools.combinations(range(len(span)), 3):
        for s1, s2 in itertools.product((1, -1), repeat=2):
            yield span[a] + span[b].scale(s1) + span[c].scale(s2)


def simple_module(H: HopfData, block: BlockData, max_candidates: int = 20000) -> SimpleModule:
    """Search e H for w with dim(H w) = k and return the action on H w."""
    k = block.degree
    span = _independent_subset([multiply(H, block.idempotent, H.basis(j)) for j in range(H.dim)])
    basis_elts = [H.basis(j) for j in range(H.dim)]
    for count, w in enumerate(_module_candidates(H, span)):
        if count >= max_candidates:
            break
        if w.is_zero():
            continue
        orbit = [multiply(H, x, w) for x in basis_elts]
        mod_basis = _independent_subset(orbit)
        if len(mod_basis) != k:
            continue
        cols = linalg.transpose([list(b.coeffs) for b in mod_basis])
        matrices = []
        for x in basis_elts:
            images = [linalg.solve(cols, list(multiply(H, x, b).coeffs)) for b in mod_basis]
            # column s holds the coordinates of x . b_s
            matrices.append(tuple(tuple(images[s][r] for s in range(k)) for r in range(k)))
        return SimpleModule(w, tuple(mod_basis), tuple(matrices))
    raise ModuleSearchFailed(
        f"no generator of a {k}-dimensional left ideal among the first {max_candidates} "
        f"candidates in the block"
    )


def simple_module_matrices(H: HopfData, block: BlockData) -> list:
    return list(simple_module(H, block).matrices)
