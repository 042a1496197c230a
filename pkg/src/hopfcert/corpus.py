"""Group algebras K[G] and their duals K^G built from Cayley tables."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .hopf import HopfData
from .scalars import Cyc


class InvalidCayleyTable(ValueError):
    pass


@dataclass(frozen=True)
class CayleyTable:
    """Multiplication table of a finite group; ``table[i][j]`` is the index of g_i g_j."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or any(len(r) != n for r in self.table):
            raise InvalidCayleyTable("table must be square and non-empty")
        full = set(range(n))
        for r in self.table:
            if set(r) != full:
                raise InvalidCayleyTable("rows are not permutations (not a Latin square)")
        for c in range(n):
            if {self.table[r][c] for r in range(n)} != full:
                raise InvalidCayleyTable("columns are not permutations (not a Latin square)")
        ids = [e for e in range(n) if all(self.table[e][x] == x == self.table[x][e] for x in range(n))]
        if not ids:
            raise InvalidCayleyTable("no two-sided identity")
        t = self.table
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise InvalidCayleyTable(f"not associative at {(a, b, c)}")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        n = self.order
        return next(e for e in range(n) if all(self.table[e][x] == x for x in range(n)))

    @property
    def inverse(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(next(b for b in range(self.order) if self.table[a][b] == e) for a in range(self.order))

    def element_order(self, a: int) -> int:
        e, x, k = self.identity, a, 1
        while x != e:
            x = self.table[x][a]
            k += 1
        return k

    @property
    def exponent(self) -> int:
        return math.lcm(*(self.element_order(a) for a in range(self.order)))

    def conjugacy_classes(self) -> list[list[int]]:
        inv = self.inverse
        t = self.table
        seen, classes = set(), []
        for a in range(self.order):
            if a in seen:
                continue
            cls = sorted({t[t[g][a]][inv[g]] for g in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    @classmethod
    def from_elements(cls, elements: Sequence[Hashable], op: Callable, labels=None) -> "CayleyTable":
        index = {g: i for i, g in enumerate(elements)}
        table = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
        return cls(table, tuple(labels or (str(g) for g in elements)))


def cyclic(n: int) -> CayleyTable:
    return CayleyTable.from_elements(list(range(n)), lambda a, b: (a + b) % n,
                                     labels=[f"r^{k}" for k in range(n)])


def _compose(p, q):
    return tuple(p[x] for x in q)


def _closure(gens):
    ident = tuple(range(len(gens[0])))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _compose(g, s)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(elems)


def symmetric3() -> CayleyTable:
    return CayleyTable.from_elements(sorted(itertools.permutations(range(3))), _compose)


def dihedral4() -> CayleyTable:
    return CayleyTable.from_elements(_closure([(1, 2, 3, 0), (0, 3, 2, 1)]), _compose)


def alternating4() -> CayleyTable:
    def even(p):
        return sum(1 for i in range(4) for j in range(i) if p[j] > p[i]) % 2 == 0
    return CayleyTable.from_elements([p for p in sorted(itertools.permutations(range(4))) if even(p)], _compose)


_QUAT = {  # unit * unit -> (sign, unit)
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion8() -> CayleyTable:
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]

    def op(a, b):
        s, u = _QUAT[(a[1], b[1])]
        return (a[0] * b[0] * s, u)
    labels = [("" if s == 1 else "-") + u for s, u in elems]
    return CayleyTable.from_elements(elems, op, labels=labels)


BUILTIN_GROUPS: dict[str, Callable[[], CayleyTable]] = {
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "C4": lambda: cyclic(4),
    "C6": lambda: cyclic(6),
    "S3": symmetric3,
    "D4": dihedral4,
    "Q8": quaternion8,
    "A4": alternating4,
}


def group_algebra(T: CayleyTable, conductor: int | None = None, name: str = "") -> HopfData:
    """K[G]: group-like basis, S(g) = g^-1.  Conductor defaults to the exponent of G."""
    N = conductor or T.exponent
    n = T.order
    zero, one = Cyc.zero(N), Cyc.one(N)
    mul = tuple(
        tuple(tuple(one if T.table[i][j] == k else zero for k in range(n)) for j in range(n))
        for i in range(n)
    )
    comul = tuple(
        tuple(tuple(one if i == j == k else zero for k in range(n)) for j in range(n))
        for i in range(n)
    )
    inv = T.inverse
    antipode = tuple(tuple(one if inv[i] == j else zero for j in range(n)) for i in range(n))
    counit = (one,) * n
    unit = tuple(one if k == T.identity else zero for k in range(n))
    return HopfData(n, N, mul, comul, antipode, counit, unit, name=name)


def dual_group_algebra(T: CayleyTable, conductor: int | None = None, name: str = "") -> HopfData:
    """K^G: basis of point functions p_g with p_a p_b = delta_ab p_a."""
    N = conductor or T.exponent
    n = T.order
    zero, one = Cyc.zero(N), Cyc.one(N)
    mul = tuple(
        tuple(tuple(one if i == j == k else zero for k in range(n)) for j in range(n))
        for i in range(n)
    )
    comul = tuple(
        tuple(tuple(one if T.table[j][k] == g else zero for k in range(n)) for j in range(n))
        for g in range(n)
    )
    inv = T.inverse
    antipode = tuple(tuple(one if inv[i] == j else zero for j in range(n)) for i in range(n))
    counit = tuple(one if g == T.identity else zero for g in range(n))
    unit = (one,) * n
    return HopfData(n, N, mul, comul, antipode, counit, unit, name=name)


def builtin(name: str, dual: bool = False, conductor: int | None = None) -> HopfData:
    try:
        T = BUILTIN_GROUPS[name]()
    except KeyError:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(BUILTIN_GROUPS)}") from None
    if dual:
        return dual_group_algebra(T, conductor, name=f"{name}_dual")
    return group_algebra(T, conductor, name=name)


def corpus(conductor: int | None = None) -> list[HopfData]:
    """All built-in group algebras followed by all their duals."""
    return [builtin(g, dual=d, conductor=conductor) for d in (False, True) for g in BUILTIN_GROUPS]
