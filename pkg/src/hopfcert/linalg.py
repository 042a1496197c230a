"""Exact Gauss-Jordan elimination over a cyclotomic field.

Matrices are lists of rows of Cyc.  Pivoting is deterministic: columns are
scanned left to right and the first row (in order) with a nonzero entry in
the column becomes the pivot row.
"""
from __future__ import annotations

from typing import Sequence

from .scalars import Cyc

Matrix = list[list[Cyc]]


class SingularMatrix(ValueError):
    pass


def _conductor_of(rows: Sequence[Sequence[Cyc]], default: int = 1) -> int:
    for row in rows:
        for x in row:
            return x.conductor
    return default


def rref(rows: Sequence[Sequence[Cyc]], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if x else x for x in m[r]]
        prow = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], prow)]
        pivots.append(c)
        r += 1
    return m[: len(pivots)], pivots


def rank(rows: Sequence[Sequence[Cyc]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Cyc]], ncols: int, conductor: int | None = None) -> Matrix:
    """Basis of {v : rows . v = 0}, one vector per free column.

    Each basis vector has a 1 in its free column and zeros in the other free
    columns.
    """
    if conductor is None:
        conductor = _conductor_of(rows)
    zero, one = Cyc.zero(conductor), Cyc.one(conductor)
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence[Cyc]], b: Sequence[Cyc]) -> list[Cyc] | None:
    """One solution x of a x = b, or None if inconsistent."""
    ncols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    zero = Cyc.zero(_conductor_of(aug))
    x = [zero] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def identity(n: int, conductor: int = 1) -> Matrix:
    zero, one = Cyc.zero(conductor), Cyc.one(conductor)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def inverse(a: Sequence[Sequence[Cyc]]) -> Matrix:
    n = len(a)
    conductor = _conductor_of(a)
    aug = [list(row) + idrow for row, idrow in zip(a, identity(n, conductor))]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in red]


def determinant(a: Sequence[Sequence[Cyc]]) -> Cyc:
    n = len(a)
    conductor = _conductor_of(a)
    m = [list(r) for r in a]
    det = Cyc.one(conductor)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Cyc.zero(conductor)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        p = m[c][c]
        det = det * p
        inv = p.inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[c])]
    return det


def matmul(a: Sequence[Sequence[Cyc]], b: Sequence[Sequence[Cyc]]) -> Matrix:
    conductor = _conductor_of(a)
    zero = Cyc.zero(conductor)
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def transpose(a: Sequence[Sequence[Cyc]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def trace(a: Sequence[Sequence[Cyc]]) -> Cyc:
    acc = Cyc.zero(_conductor_of(a))
    for i, row in enumerate(a):
        acc = acc + row[i]
    return acc
