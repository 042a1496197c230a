"""Weak R-forms, divisibility certificates and the integral-lattice replay.

A weak R-form is a basis in which every structure constant of the
multiplication and every coefficient of nu lies in R.  Given one, every
block degree k must satisfy n/k in R; ``theorem2_replay`` reconstructs the
argument for that conclusion on an explicit module lattice.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .hopf import HopfData, SingularBasis, change_of_basis, transform_tensor
from .integrals import nu_tensor
from .scalars import INTEGERS, Cyc, IncompatibleField, SubringSpec, euler_phi, in_subring
from .wedderburn import BlockData, SimpleModule, simple_module


def _member(x: Cyc, ring: SubringSpec) -> bool:
    # a coefficient outside the ring's field is simply not in the ring
    try:
        return in_subring(x, ring)
    except IncompatibleField:
        return False


@dataclass(frozen=True)
class FormReport:
    basis: tuple
    subring: SubringSpec
    mul_violations: tuple = ()
    nu_violations: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.mul_violations and not self.nu_violations


def weak_form_check(H: HopfData, lam, B, ring: SubringSpec) -> FormReport:
    """Test whether the columns of B span a weak ``ring``-form of H."""
    Bm = [[H.scalar(x) for x in row] for row in B]
    H2 = change_of_basis(H, Bm)
    nu = transform_tensor(nu_tensor(H, lam), Bm)
    n = H.dim
    mul_bad = tuple(
        (i, j, k, H2.mul[i][j][k])
        for i in range(n) for j in range(n) for k in range(n)
        if H2.mul[i][j][k] and not _member(H2.mul[i][j][k], ring)
    )
    nu_bad = tuple((i, j, c) for i, j, c in nu.nonzero() if not _member(c, ring))
    return FormReport(tuple(tuple(r) for r in Bm), ring, mul_bad, nu_bad)


@dataclass(frozen=True)
class FrobeniusCertificate:
    n: int
    degrees: tuple[int, ...]
    subrings: tuple[SubringSpec, ...]
    quotients: tuple[Fraction, ...]
    verdicts: tuple[tuple[bool, ...], ...]  # verdicts[i][r]: quotient i in subring r

    @property
    def overall(self) -> bool:
        return all(all(row) for row in self.verdicts)


def frobenius_certificate(n: int, degrees: Sequence[int], subrings: Sequence[SubringSpec]) -> FrobeniusCertificate:
    if any(k <= 0 for k in degrees):
        raise ValueError("block degrees must be positive")
    quotients = tuple(Fraction(n, k) for k in degrees)
    verdicts = tuple(tuple(in_subring(Cyc.rational(q), R) for R in subrings) for q in quotients)
    return FrobeniusCertificate(n, tuple(degrees), tuple(subrings), quotients, verdicts)


# -- integer lattices -----------------------------------------------------------------

class RankDeficient(ValueError):
    def __init__(self, rank: int, expected: int):
        super().__init__(f"lattice has rank {rank}, expected {expected}")
        self.rank = rank
        self.expected = expected


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form; returns the nonzero rows.

    Pivots are positive, strictly move right row by row, and entries above a
    pivot are reduced into [0, pivot).
    """
    A = [[int(x) for x in r] for r in rows]
    if not A:
        return []
    m, ncols = len(A), len(A[0])
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(A[i][c]), i))
            A[r], A[piv] = A[piv], A[r]
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    clean = clean and not A[i][c]
            if clean:
                break
        if not A[r][c]:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
    return A[:r]


def lattice_basis_hnf(vectors: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """HNF basis of the Z-span of rational vectors, which must have full rank.

    Denominators are cleared by their LCM before the integer reduction and
    restored afterwards.
    """
    rows = [[Fraction(x) for x in v] for v in vectors]
    k = len(rows[0]) if rows else 0
    scale = math.lcm(*(x.denominator for r in rows for x in r)) if rows else 1
    hnf = hermite_normal_form([[int(x * scale) for x in r] for r in rows])
    if len(hnf) != k:
        raise RankDeficient(len(hnf), k)
    return [tuple(Fraction(x, scale) for x in r) for r in hnf]


# -- replay ---------------------------------------------------------------------------

class ReplayFailed(RuntimeError):
    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


@dataclass
class ReplayReport:
    degree: int
    ring: SubringSpec
    quotient: Fraction
    generator: tuple                # x in module coordinates
    lattice_basis: list             # columns of F, module coordinates
    matrices: list                  # rho(x'_t) in the lattice basis
    character: list                 # chi(x'_t)
    identity_rhs: list              # sum nu'^{ij} chi(x'_i) rho(x'_j)
    certificate_agrees: bool
    notes: list = field(default_factory=list)


def _flatten(vec: Sequence[Cyc]) -> list[Fraction]:
    return [c for x in vec for c in x.coeffs]


def _unflatten(flat: Sequence[Fraction], k: int, conductor: int) -> list[Cyc]:
    phi = euler_phi(conductor)
    return [Cyc(flat[i * phi:(i + 1) * phi], conductor) for i in range(k)]


def _combine(H: HopfData, B, t: int, mats, k: int):
    """sum_i B[i][t] mats[i] for k x k matrices."""
    out = [[H.zero] * k for _ in range(k)]
    for i in range(H.dim):
        b = B[i][t]
        if b:
            for r in range(k):
                for s in range(k):
                    if mats[i][r][s]:
                        out[r][s] = out[r][s] + b * mats[i][r][s]
    return out


def _matvec(m, v):
    out = []
    for row in m:
        acc = None
        for a, b in zip(row, v):
            if a and b:
                acc = a * b if acc is None else acc + a * b
        out.append(acc if acc is not None else Cyc.zero(v[0].conductor))
    return out


def theorem2_replay(H: HopfData, lam, B, block: BlockData, ring: SubringSpec = INTEGERS,
                    module: SimpleModule | None = None) -> ReplayReport:
    """Replay the lattice argument forcing n/k into ``ring`` for one block.

    Over Z the lattice N = H_Z x is put in Hermite normal form and must have
    rank k.  For other rings only 1-dimensional blocks are supported; there the
    1x1 action matrices do not depend on the choice of lattice basis.
    """
    n, k, N = H.dim, block.degree, H.conductor
    Bm = [[H.scalar(x) for x in row] for row in B]
    form = weak_form_check(H, lam, Bm, ring)
    if not form.passed:
        raise ReplayFailed(0, f"basis is not a weak {ring}-form")
    if ring != INTEGERS and k != 1:
        raise ReplayFailed(1, f"lattice bases over {ring} are only handled for k = 1")

    module = module or simple_module(H, block)
    rho = [_combine(H, Bm, t, module.matrices, k) for t in range(n)]
    chi = []
    for t in range(n):
        acc = H.zero
        for i in range(n):
            if Bm[i][t]:
                acc = acc + Bm[i][t] * block.character[i]
        chi.append(acc)

    # step 1: a generator x and a basis of the lattice N = H_R x
    notes = []
    x = None
    for s in range(k):
        cand = [H.one if r == s else H.zero for r in range(k)]
        orbit = [_matvec(m, cand) for m in rho]
        if linalg.rank(orbit) == k:
            x = cand
            break
    if x is None:
        raise ReplayFailed(1, "no module basis vector generates the module")
    orbit = [_matvec(m, x) for m in rho]
    if ring == INTEGERS:
        flat = [_flatten(v) for v in orbit]
        scale = math.lcm(*(c.denominator for v in flat for c in v))
        hnf = hermite_normal_form([[int(c * scale) for c in v] for v in flat])
        if len(hnf) != k:
            raise ReplayFailed(
                1, f"Z-lattice H_Z x has rank {len(hnf)} but the module has dimension {k}; "
                   "the module is not defined over Q in this basis"
            )
        basis_vecs = [_unflatten([Fraction(c, scale) for c in row], k, N) for row in hnf]
        notes.append(f"lattice scaled by {scale} for the integer reduction")
    else:
        basis_vecs = [x]
        notes.append("rank-1 module: 1x1 action matrices are basis independent")
    F = linalg.transpose(basis_vecs)  # columns are the lattice basis
    try:
        Finv = linalg.inverse(F)
    except linalg.SingularMatrix:
        raise ReplayFailed(1, "lattice basis is not a basis of the module") from None

    # step 2: the action in the lattice basis has coefficients in R
    rho_l = [linalg.matmul(linalg.matmul(Finv, m), F) for m in rho]
    for t, m in enumerate(rho_l):
        for row in m:
            for c in row:
                if not _member(c, ring):
                    raise ReplayFailed(2, f"rho(x'_{t}) has entry {c} outside {ring}")
        if not _member(chi[t], ring):
            raise ReplayFailed(2, f"chi(x'_{t}) = {chi[t]} is outside {ring}")

    # step 3: (n/k) Id = sum nu'^{ij} chi(x'_i) rho(x'_j)
    nu = transform_tensor(nu_tensor(H, lam), Bm)
    rhs = [[H.zero] * k for _ in range(k)]
    for i, j, c in nu.nonzero():
        w = c * chi[i]
        if w:
            for r in range(k):
                for s in range(k):
                    if rho_l[j][r][s]:
                        rhs[r][s] = rhs[r][s] + w * rho_l[j][r][s]
    q = Fraction(n, k)
    lhs = [[H.scalar(q) if r == s else H.zero for s in range(k)] for r in range(k)]
    if rhs != lhs:
        raise ReplayFailed(3, "nu contracted against chi and rho is not (n/k) Id")

    # step 4: n/k is an entry of a matrix over R
    if not _member(rhs[0][0], ring):
        raise ReplayFailed(4, f"n/k = {q} is not in {ring}")
    cert = frobenius_certificate(n, [k], [ring])
    return ReplayReport(k, ring, q, tuple(x), [tuple(v) for v in basis_vecs], rho_l, chi, rhs,
                        cert.overall, notes)
