"""Finite-dimensional Hopf algebras given by structure constants.

Conventions (0-based basis x_0..x_{n-1}):

* ``mul[i][j][k]``    coefficient of x_k in x_i x_j
* ``comul[i][j][k]``  coefficient of x_j (x) x_k in Delta(x_i)
* ``antipode[i][j]``  coefficient of x_j in S(x_i)
* ``counit[i]``       epsilon(x_i)
* ``unit[i]``         coefficient of x_i in 1

A change-of-basis matrix B has the new basis vectors as its columns:
x'_j = sum_i B[i][j] x_i.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from . import linalg
from .scalars import Cyc, as_cyc, format_scalar, parse_scalar


class SingularBasis(ValueError):
    """A proposed basis matrix is not invertible."""


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Element:
    """Coefficient vector of an element of H."""

    coeffs: tuple[Cyc, ...]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "Element") -> "Element":
        _same_dim(self, other)
        return Element(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Element") -> "Element":
        _same_dim(self, other)
        return Element(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Element":
        return Element(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "Element":
        return Element(tuple(a * c if a else a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coeffs)

    def __str__(self):
        return "[" + ", ".join(format_scalar(c) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class TensorSquare:
    """Coefficient matrix of an element of H (x) H; entry (i, j) multiplies x_i (x) x_j."""

    coeffs: tuple[tuple[Cyc, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.coeffs[i][j]

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def nonzero(self):
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    yield i, j, c

    def __str__(self):
        terms = [f"({format_scalar(c)}) x{i}(x)x{j}" for i, j, c in self.nonzero()]
        return " + ".join(terms) if terms else "0"


def _same_dim(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(f"dimension {len(a)} vs {len(b)}")


@dataclass(frozen=True)
class HopfData:
    dim: int
    conductor: int
    mul: tuple
    comul: tuple
    antipode: tuple
    counit: tuple
    unit: tuple
    name: str = field(default="", compare=False)

    # sparse views, built lazily -------------------------------------------------

    @cached_property
    def mul_table(self) -> list[list[list[tuple[int, Cyc]]]]:
        return [
            [[(k, c) for k, c in enumerate(self.mul[i][j]) if c] for j in range(self.dim)]
            for i in range(self.dim)
        ]

    @cached_property
    def comul_table(self) -> list[list[tuple[int, int, Cyc]]]:
        return [
            [(j, k, c) for j, row in enumerate(self.comul[i]) for k, c in enumerate(row) if c]
            for i in range(self.dim)
        ]

    @cached_property
    def regular_trace_vector(self) -> tuple[Cyc, ...]:
        """t_i = trace of left multiplication by x_i."""
        return tuple(
            sum((self.mul[i][k][k] for k in range(self.dim)), self.zero)
            for i in range(self.dim)
        )

    @property
    def zero(self) -> Cyc:
        return Cyc.zero(self.conductor)

    @property
    def one(self) -> Cyc:
        return Cyc.one(self.conductor)

    def scalar(self, x) -> Cyc:
        return as_cyc(x, self.conductor)

    def basis(self, i: int) -> Element:
        z, o = self.zero, self.one
        return Element(tuple(o if k == i else z for k in range(self.dim)))

    def element(self, coeffs: Iterable) -> Element:
        out = tuple(self.scalar(c) for c in coeffs)
        if len(out) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coefficients, got {len(out)}")
        return Element(out)

    def zero_element(self) -> Element:
        return Element((self.zero,) * self.dim)

    def unit_element(self) -> Element:
        return Element(tuple(self.unit))

    def tensor(self, entries: dict | None = None) -> TensorSquare:
        z = self.zero
        rows = [[z] * self.dim for _ in range(self.dim)]
        for (i, j), c in (entries or {}).items():
            rows[i][j] = rows[i][j] + self.scalar(c)
        return TensorSquare(tuple(tuple(r) for r in rows))


def _check(H: HopfData, *elts):
    for e in elts:
        if len(e) != H.dim:
            raise DimensionMismatch(f"element of length {len(e)} in algebra of dim {H.dim}")


# -- the basic operations ------------------------------------------------------------

def multiply(H: HopfData, a: Element, b: Element) -> Element:
    _check(H, a, b)
    out = [H.zero] * H.dim
    table = H.mul_table
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        row = table[i]
        for j, bj in enumerate(b.coeffs):
            if not bj:
                continue
            ab = ai * bj
            for k, c in row[j]:
                out[k] = out[k] + ab * c
    return Element(tuple(out))


def comultiply(H: HopfData, a: Element) -> TensorSquare:
    _check(H, a)
    out = [[H.zero] * H.dim for _ in range(H.dim)]
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, k, c in H.comul_table[i]:
                out[j][k] = out[j][k] + ai * c
    return TensorSquare(tuple(tuple(r) for r in out))


def apply_matrix(H: HopfData, mat: Sequence[Sequence[Cyc]], a: Element) -> Element:
    """Linear map whose row i is the image of x_i."""
    out = [H.zero] * H.dim
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, c in enumerate(mat[i]):
                if c:
                    out[j] = out[j] + ai * c
    return Element(tuple(out))


def antipode_apply(H: HopfData, a: Element) -> Element:
    _check(H, a)
    return apply_matrix(H, H.antipode, a)


def counit_apply(H: HopfData, a: Element) -> Cyc:
    _check(H, a)
    acc = H.zero
    for ai, e in zip(a.coeffs, H.counit):
        if ai and e:
            acc = acc + ai * e
    return acc


def regular_trace(H: HopfData, a: Element) -> Cyc:
    """Trace of h -> a h on H."""
    acc = H.zero
    for ai, t in zip(a.coeffs, H.regular_trace_vector):
        if ai and t:
            acc = acc + ai * t
    return acc


def tensor_map(H: HopfData, t: TensorSquare, left=None, right=None) -> TensorSquare:
    """(left (x) right)(t) for linear maps given as row-image matrices (None = Id)."""
    rows = [list(r) for r in t.coeffs]
    if left is not None:
        cols = list(zip(*rows))
        rows = list(zip(*[apply_matrix(H, left, Element(tuple(c))).coeffs for c in cols]))
        rows = [list(r) for r in rows]
    if right is not None:
        rows = [list(apply_matrix(H, right, Element(tuple(r))).coeffs) for r in rows]
    return TensorSquare(tuple(tuple(r) for r in rows))


def tensor_multiply(H: HopfData, s: TensorSquare, t: TensorSquare) -> TensorSquare:
    """Product in the algebra H (x) H."""
    out = [[H.zero] * H.dim for _ in range(H.dim)]
    table = H.mul_table
    tnz = list(t.nonzero())
    for a, b, c1 in s.nonzero():
        for c, d, c2 in tnz:
            left = table[a][c]
            right = table[b][d]
            if not left or not right:
                continue
            coef = c1 * c2
            for k1, v1 in left:
                cv = coef * v1
                for k2, v2 in right:
                    out[k1][k2] = out[k1][k2] + cv * v2
    return TensorSquare(tuple(tuple(r) for r in out))


def tensor_contract(H: HopfData, t: TensorSquare) -> Element:
    """m(t): sum t^{ij} x_i x_j."""
    out = [H.zero] * H.dim
    for i, j, c in t.nonzero():
        for k, v in H.mul_table[i][j]:
            out[k] = out[k] + c * v
    return Element(tuple(out))


def pair_functionals(t: TensorSquare, f: Sequence[Cyc], g: Sequence[Cyc]) -> Cyc:
    """(f (x) g)(t) for functionals given by their values on the basis."""
    acc = None
    for i, j, c in t.nonzero():
        if f[i] and g[j]:
            term = c * f[i] * g[j]
            acc = term if acc is None else acc + term
    if acc is None:
        return Cyc.zero(t.coeffs[0][0].conductor)
    return acc


def left_functional(H: HopfData, t: TensorSquare, f: Sequence[Cyc]) -> Element:
    """(f (x) Id)(t)."""
    out = [H.zero] * H.dim
    for i, j, c in t.nonzero():
        if f[i]:
            out[j] = out[j] + c * f[i]
    return Element(tuple(out))


# -- axioms -------------------------------------------------------------------------

AXIOM_NAMES = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comul_multiplicative",
    "comul_unital",
    "counit_multiplicative",
    "counit_unital",
    "antipode_left",
    "antipode_right",
    "involutive",
)


@dataclass(frozen=True)
class AxiomResult:
    passed: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class AxiomReport:
    results: dict

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    @property
    def hopf_passed(self) -> bool:
        """Everything except involutivity of S."""
        return all(r.passed for name, r in self.results.items() if name != "involutive")

    def failures(self) -> dict:
        return {k: r.witness for k, r in self.results.items() if not r.passed}

    def __getitem__(self, name) -> AxiomResult:
        return self.results[name]


def _first_failure(cases):
    for witness, ok in cases:
        if not ok:
            return AxiomResult(False, witness)
    return AxiomResult(True)


def check_axioms(H: HopfData) -> AxiomReport:
    """Check every Hopf algebra axiom on basis elements.

    Each axiom is evaluated independently; a failure carries the basis indices
    at which it first breaks.
    """
    n = H.dim
    basis = [H.basis(i) for i in range(n)]
    one = H.unit_element()
    S = H.antipode

    prods = [[multiply(H, basis[i], basis[j]) for j in range(n)] for i in range(n)]
    coprods = [comultiply(H, basis[i]) for i in range(n)]

    def assoc():
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = multiply(H, prods[i][j], basis[k])
                    right = multiply(H, basis[i], prods[j][k])
                    yield (i, j, k), left == right

    def unit():
        for i in range(n):
            yield (i,), multiply(H, one, basis[i]) == basis[i] == multiply(H, basis[i], one)

    def coassoc():
        for i in range(n):
            left: dict = {}
            right: dict = {}
            for j, k, c in H.comul_table[i]:
                for a, b, d in H.comul_table[j]:
                    key = (a, b, k)
                    left[key] = left.get(key, H.zero) + c * d
                for a, b, d in H.comul_table[k]:
                    key = (j, a, b)
                    right[key] = right.get(key, H.zero) + c * d
            keys = set(left) | set(right)
            yield (i,), all(left.get(q, H.zero) == right.get(q, H.zero) for q in keys)

    def counit():
        for i in range(n):
            l = [H.zero] * n
            r = [H.zero] * n
            for j, k, c in H.comul_table[i]:
                l[k] = l[k] + c * H.counit[j]
                r[j] = r[j] + c * H.counit[k]
            yield (i,), Element(tuple(l)) == basis[i] == Element(tuple(r))

    def comul_mult():
        for i in range(n):
            for j in range(n):
                yield (i, j), comultiply(H, prods[i][j]) == tensor_multiply(H, coprods[i], coprods[j])

    def comul_unital():
        uu = H.tensor({(a, b): H.unit[a] * H.unit[b] for a in range(n) for b in range(n)})
        yield (), comultiply(H, one) == uu

    def counit_mult():
        for i in range(n):
            for j in range(n):
                yield (i, j), counit_apply(H, prods[i][j]) == H.counit[i] * H.counit[j]

    def counit_unital():
        yield (), counit_apply(H, one) == H.one

    def antipode(side):
        for i in range(n):
            t = tensor_map(H, coprods[i], left=S if side == "left" else None,
                           right=S if side == "right" else None)
            yield (i,), tensor_contract(H, t) == one.scale(H.counit[i])

    def involutive():
        for i in range(n):
            yield (i,), antipode_apply(H, antipode_apply(H, basis[i])) == basis[i]

    results = {
        "associativity": _first_failure(assoc()),
        "unit": _first_failure(unit()),
        "coassociativity": _first_failure(coassoc()),
        "counit": _first_failure(counit()),
        "comul_multiplicative": _first_failure(comul_mult()),
        "comul_unital": _first_failure(comul_unital()),
        "counit_multiplicative": _first_failure(counit_mult()),
        "counit_unital": _first_failure(counit_unital()),
        "antipode_left": _first_failure(antipode("left")),
        "antipode_right": _first_failure(antipode("right")),
        "involutive": _first_failure(involutive()),
    }
    return AxiomReport(results)


# -- change of basis ------------------------------------------------------------------

def _as_matrix(H: HopfData, B) -> list[list[Cyc]]:
    mat = [[H.scalar(x) for x in row] for row in B]
    if len(mat) != H.dim or any(len(r) != H.dim for r in mat):
        raise DimensionMismatch(f"basis matrix must be {H.dim}x{H.dim}")
    return mat


def coordinates(C: Sequence[Sequence[Cyc]], v: Element) -> Element:
    """Coordinates C.v of v in a new basis, C the inverse basis matrix."""
    out = []
    for row in C:
        acc = None
        for c, x in zip(row, v.coeffs):
            if c and x:
                acc = c * x if acc is None else acc + c * x
        out.append(acc if acc is not None else Cyc.zero(row[0].conductor))
    return Element(tuple(out))


def change_of_basis(H: HopfData, B) -> HopfData:
    """Rewrite every structure tensor of H in the basis given by the columns of B."""
    Bm = _as_matrix(H, B)
    try:
        C = linalg.inverse(Bm)
    except linalg.SingularMatrix as exc:
        raise SingularBasis("basis matrix is singular") from exc
    n = H.dim
    new = [Element(tuple(Bm[i][j] for i in range(n))) for j in range(n)]

    def coords(v: Element) -> tuple[Cyc, ...]:
        return coordinates(C, v).coeffs

    mul = tuple(
        tuple(coords(multiply(H, new[i], new[j])) for j in range(n)) for i in range(n)
    )
    comul = []
    for i in range(n):
        t = comultiply(H, new[i])
        comul.append(tuple(tuple(r) for r in transform_tensor_rows(t, C)))
    antipode = tuple(coords(antipode_apply(H, new[i])) for i in range(n))
    counit = tuple(counit_apply(H, new[i]) for i in range(n))
    unit = coords(H.unit_element())
    return HopfData(n, H.conductor, mul, tuple(comul), antipode, counit, unit, name=H.name)


def transform_tensor_rows(t: TensorSquare, C: Sequence[Sequence[Cyc]]) -> list[list[Cyc]]:
    """C t C^T: coefficients of a tensor in the basis whose inverse matrix is C."""
    tm = [list(r) for r in t.coeffs]
    return linalg.matmul(linalg.matmul(C, tm), linalg.transpose(C))


def transform_tensor(t: TensorSquare, B) -> TensorSquare:
    """Coefficients of t in the basis given by the columns of B."""
    try:
        C = linalg.inverse(B)
    except linalg.SingularMatrix as exc:
        raise SingularBasis("basis matrix is singular") from exc
    return TensorSquare(tuple(tuple(r) for r in transform_tensor_rows(t, C)))


# -- JSON ----------------------------------------------------------------------------

def hopf_from_dict(data: dict, name: str = "") -> HopfData:
    n = int(data["dim"])
    N = int(data.get("conductor", 1))

    def sc(x):
        return parse_scalar(x, N)

    zero = Cyc.zero(N)
    mul = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, c in data.get("mul", []):
        mul[i][j][k] = mul[i][j][k] + sc(c)
    comul = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, c in data.get("comul", []):
        comul[i][j][k] = comul[i][j][k] + sc(c)
    antipode = [[sc(x) for x in row] for row in data["antipode"]]
    counit = [sc(x) for x in data["counit"]]
    unit = [sc(x) for x in data["unit"]]
    if len(antipode) != n or any(len(r) != n for r in antipode):
        raise DimensionMismatch("antipode must be dim x dim")
    if len(counit) != n or len(unit) != n:
        raise DimensionMismatch("counit and unit must have length dim")
    freeze = lambda t: tuple(freeze(x) for x in t) if isinstance(t, list) else t
    return HopfData(n, N, freeze(mul), freeze(comul), freeze(antipode),
                    tuple(counit), tuple(unit), name=data.get("name", name))


def hopf_to_dict(H: HopfData) -> dict:
    n = H.dim
    out = {"dim": n, "conductor": H.conductor}
    if H.name:
        out["name"] = H.name
    out["mul"] = [
        [i, j, k, format_scalar(H.mul[i][j][k])]
        for i in range(n) for j in range(n) for k in range(n) if H.mul[i][j][k]
    ]
    out["comul"] = [
        [i, j, k, format_scalar(H.comul[i][j][k])]
        for i in range(n) for j in range(n) for k in range(n) if H.comul[i][j][k]
    ]
    out["antipode"] = [[format_scalar(x) for x in row] for row in H.antipode]
    out["counit"] = [format_scalar(x) for x in H.counit]
    out["unit"] = [format_scalar(x) for x in H.unit]
    return out


def load_hopf(path) -> HopfData:
    path = Path(path)
    with open(path) as fh:
        data = json.load(fh)
    return hopf_from_dict(data, name=path.stem)


def dump_hopf(H: HopfData, path) -> None:
    with open(path, "w") as fh:
        json.dump(hopf_to_dict(H), fh, indent=1)
        fh.write("\n")
