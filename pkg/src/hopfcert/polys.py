"""Univariate polynomials over Q(zeta_N) and root finding inside the field.

Polynomials are lists of Cyc, lowest degree first, with no trailing zeros
(the zero polynomial is the empty list).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import sympy

from .scalars import Cyc, as_cyc, euler_phi, zeta

Poly = list[Cyc]


class NotSplit(ValueError):
    """A polynomial has an irreducible factor of degree > 1 over the field."""


def trim(f: Sequence[Cyc]) -> Poly:
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def degree(f: Poly) -> int:
    return len(f) - 1


def add(f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = out[i] + c
    return trim(out)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, [-c for c in g])


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return []
    zero = Cyc.zero(f[0].conductor)
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = out[i + j] + a * b
    return trim(out)


def scale(f: Poly, c) -> Poly:
    return trim([a * c for a in f])


def monic(f: Poly) -> Poly:
    if not f:
        return f
    inv = f[-1].inverse()
    return [a * inv for a in f]


def divmod_(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    if len(r) < len(g):
        return [], trim(r)
    inv = g[-1].inverse()
    q = [Cyc.zero(g[0].conductor)] * (len(r) - len(g) + 1)
    for shift in range(len(q) - 1, -1, -1):
        c = r[shift + len(g) - 1] * inv
        q[shift] = c
        if c:
            for i, b in enumerate(g):
                r[shift + i] = r[shift + i] - c * b
    return trim(q), trim(r[: len(g) - 1])


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd."""
    f, g = trim(f), trim(g)
    while g:
        f, g = g, divmod_(f, g)[1]
    return monic(f)


def evaluate(f: Poly, x: Cyc) -> Cyc:
    acc = Cyc.zero(x.conductor)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f: Poly) -> Poly:
    return trim([c * i for i, c in enumerate(f)][1:])


def shift(f: Poly, c: Cyc) -> Poly:
    """f(x + c)."""
    out: Poly = []
    lin = trim([c, Cyc.one(c.conductor)])
    for a in reversed(f):
        out = add(mul(out, lin), [a])
    return out


def galois(f: Poly, a: int) -> Poly:
    return [c.galois(a) for c in f]


def from_roots(roots: Sequence[Cyc]) -> Poly:
    out: Poly = [Cyc.one(roots[0].conductor)] if roots else []
    for r in roots:
        out = mul(out, [-r, Cyc.one(r.conductor)])
    return out


def norm_to_rational(f: Poly) -> list[Fraction]:
    """prod over Gal(K/Q) of the conjugates of f; a polynomial over Q."""
    N = f[0].conductor
    out: Poly = [Cyc.one(N)]
    for a in range(1, max(N, 2)):
        if math.gcd(a, N) == 1:
            out = mul(out, galois(f, a))
    return [c.to_fraction() for c in out]


def _rational_poly(coeffs: Sequence[Fraction], conductor: int = 1) -> Poly:
    return trim([Cyc.rational(c, conductor) for c in coeffs])


def is_squarefree_rational(coeffs: Sequence[Fraction]) -> bool:
    f = _rational_poly(coeffs)
    return degree(gcd(f, derivative(f))) == 0


def factor_rational(coeffs: Sequence[Fraction]) -> list[list[Fraction]]:
    """Monic irreducible factors over Q (with repetition by multiplicity)."""
    x = sympy.Symbol("x")
    p = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x,
                   domain=sympy.QQ)
    _, factors = p.factor_list()
    out = []
    for fac, mult in factors:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        lead = cs[-1]
        cs = [c / lead for c in cs]
        out.extend([cs] * mult)
    return out


def roots_in_field(f: Poly, conductor: int) -> list[Cyc]:
    """All roots in Q(zeta_conductor) of a squarefree f that splits there.

    Raises NotSplit if f has a non-linear irreducible factor over the field.
    """
    f = monic(trim([as_cyc(c, conductor) for c in f]))
    if degree(f) < 1:
        return []
    if all(c.is_rational() for c in f):
        roots = []
        for q in factor_rational([c.to_fraction() for c in f]):
            if len(q) == 2:
                roots.append(Cyc.rational(-q[0], conductor))
            else:
                roots.extend(_trager_roots(_rational_poly(q, conductor), conductor))
        return roots
    return _trager_roots(f, conductor)


def _trager_roots(g: Poly, conductor: int, max_shift: int = 50) -> list[Cyc]:
    g = [as_cyc(c, conductor) for c in g]
    if degree(g) == 1:
        return [-g[0] / g[1]]
    if euler_phi(conductor) == 1:
        raise NotSplit(f"degree {degree(g)} factor irreducible over Q")
    theta = zeta(conductor)
    for s in range(max_shift):
        # h(x) = g(x - s theta); its norm is squarefree for all but finitely many s
        h = shift(g, theta * (-s)) if s else g
        nrm = norm_to_rational(h)
        if not is_squarefree_rational(nrm):
            continue
        roots = []
        for q in factor_rational(nrm):
            common = gcd(_rational_poly(q, conductor), h)
            if degree(common) == 0:
                continue
            if degree(common) != 1:
                raise NotSplit(
                    f"factor of degree {degree(common)} does not split over Q(zeta_{conductor})"
                )
            mu = -common[0]
            roots.append(mu - theta * s)
        if len(roots) != degree(g):
            raise NotSplit("root count mismatch after Trager lift")
        return roots
    raise NotSplit("no squarefree norm found")  # pragma: no cover
