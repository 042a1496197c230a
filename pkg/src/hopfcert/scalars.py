"""Exact arithmetic in Q and in cyclotomic fields Q(zeta_N), plus subring tests.

An element of Q(zeta_N) is stored as its coordinate vector in the power basis
1, zeta, ..., zeta^(phi(N)-1) of Q[x]/(Phi_N).  Conductor 1 is Q itself.
Values of different conductors mix freely: both sides are embedded into the
field of the least common multiple before the operation.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

__all__ = [
    "Cyc",
    "IncompatibleField",
    "SubringSpec",
    "INTEGERS",
    "VALUATION_INFINITY",
    "as_cyc",
    "cyclotomic_polynomial",
    "euler_phi",
    "in_subring",
    "is_prime",
    "p_valuation",
    "parse_ring",
    "parse_scalar",
    "zeta",
]

Scalarish = Union["Cyc", int, Fraction]

# p_valuation(0, p); compares above every integer.
VALUATION_INFINITY = math.inf


class IncompatibleField(ValueError):
    """A scalar does not live in the field a subring is defined over."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in _prime_factors(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 = prod_{d | n} Phi_d(x)
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for shift in range(len(q) - 1, -1, -1):
        c = num[shift + len(den) - 1] // den[-1]
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return q


@lru_cache(maxsize=None)
def _power_table(n: int, top: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of x^e mod Phi_n for e = 0..top."""
    phi = euler_phi(n)
    mod = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(top + 1):
        rows.append(tuple(cur))
        # multiply by x, reduce with x^phi = -sum(mod[i] x^i)
        carry = cur[-1]
        cur = [0] + cur[:-1]
        if carry:
            for i in range(phi):
                cur[i] -= carry * mod[i]
    return tuple(rows)


def _reduce_exponent_vector(n: int, vec: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce sum vec[e] x^e modulo Phi_n (vec may be any length)."""
    phi = euler_phi(n)
    if len(vec) <= phi:
        return tuple(vec) + (Fraction(0),) * (phi - len(vec))
    table = _power_table(n, len(vec) - 1)
    out = list(vec[:phi])
    for e in range(phi, len(vec)):
        c = vec[e]
        if c:
            for i, t in enumerate(table[e]):
                if t:
                    out[i] += c * t
    return tuple(out)


_ZERO = Fraction(0)
_ONE = Fraction(1)


class Cyc:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, coeffs: Iterable, conductor: int = 1):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        cs = tuple(c if type(c) is Fraction else Fraction(c) for c in coeffs)
        if len(cs) != euler_phi(conductor):
            raise ValueError(
                f"expected {euler_phi(conductor)} coordinates for conductor "
                f"{conductor}, got {len(cs)}"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def _raw(cls, coeffs: tuple, conductor: int) -> "Cyc":
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Cyc is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def rational(cls, q, conductor: int = 1) -> "Cyc":
        phi = euler_phi(conductor)
        return cls._raw((Fraction(q),) + (_ZERO,) * (phi - 1), conductor)

    @classmethod
    def zero(cls, conductor: int = 1) -> "Cyc":
        return cls._raw((_ZERO,) * euler_phi(conductor), conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> "Cyc":
        return cls.rational(1, conductor)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- field embeddings ----------------------------------------------------

    def embed(self, conductor: int) -> "Cyc":
        """Image of self in Q(zeta_conductor); requires self.conductor | conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise IncompatibleField(
                f"conductor {self.conductor} does not divide {conductor}"
            )
        if self.is_rational():
            return Cyc.rational(self.coeffs[0], conductor)
        step = conductor // self.conductor
        vec = [_ZERO] * (step * (len(self.coeffs) - 1) + 1)
        for t, c in enumerate(self.coeffs):
            vec[t * step] = c
        return Cyc._raw(_reduce_exponent_vector(conductor, vec), conductor)

    def galois(self, a: int) -> "Cyc":
        """Apply the automorphism zeta -> zeta^a (gcd(a, N) = 1)."""
        n = self.conductor
        if math.gcd(a, n) != 1:
            raise ValueError(f"{a} is not a unit mod {n}")
        if self.is_rational():
            return self
        a %= n
        vec = [_ZERO] * n
        for t, c in enumerate(self.coeffs):
            if c:
                vec[(a * t) % n] += c
        return Cyc._raw(_reduce_exponent_vector(n, vec), n)

    def conjugates(self) -> list["Cyc"]:
        n = self.conductor
        return [self.galois(a) for a in range(1, max(n, 2)) if math.gcd(a, n) == 1]

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        acc = Cyc.one(self.conductor)
        for c in self.conjugates():
            acc = acc * c
        return acc.to_fraction()

    def min_conductor(self) -> int:
        """Smallest d | N with self in Q(zeta_d)."""
        n = self.conductor
        if self.is_rational():
            return 1
        units = [a for a in range(1, n) if math.gcd(a, n) == 1]
        for d in range(2, n + 1):
            if n % d:
                continue
            if all(self.galois(a) == self for a in units if a % d == 1):
                return d
        return n

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> tuple["Cyc", "Cyc"]:
        if isinstance(other, Cyc):
            if other.conductor == self.conductor:
                return self, other
            if other.is_rational():
                return self, Cyc.rational(other.coeffs[0], self.conductor)
            if self.is_rational():
                return Cyc.rational(self.coeffs[0], other.conductor), other
            L = self.conductor * other.conductor // math.gcd(self.conductor, other.conductor)
            return self.embed(L), other.embed(L)
        if isinstance(other, (int, Fraction)):
            return self, Cyc.rational(other, self.conductor)
        return NotImplemented, NotImplemented

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyc._raw(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.conductor)

    __radd__ = __add__

    def __neg__(self):
        return Cyc._raw(tuple(-x for x in self.coeffs), self.conductor)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyc._raw(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.conductor)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc._raw(tuple(x * other for x in self.coeffs), self.conductor)
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        n = a.conductor
        if b.is_rational():
            s = b.coeffs[0]
            return Cyc._raw(tuple(x * s for x in a.coeffs), n)
        if a.is_rational():
            s = a.coeffs[0]
            return Cyc._raw(tuple(x * s for x in b.coeffs), n)
        phi = len(a.coeffs)
        vec = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        vec[i + j] += x * y
        return Cyc._raw(_reduce_exponent_vector(n, vec), n)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return Cyc.rational(1 / self.coeffs[0], self.conductor)
        # x^{-1} = (product of the other conjugates) / N(x)
        others = Cyc.one(self.conductor)
        for a in range(2, self.conductor):
            if math.gcd(a, self.conductor) == 1:
                others = others * self.galois(a)
        nrm = (self * others).to_fraction()
        return others * (1 / nrm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return as_cyc(other, self.conductor) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyc.one(self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyc):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # consistent with __eq__ for rationals across conductors
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.coeffs

    def __repr__(self):
        return f"Cyc({self})"

    def __str__(self):
        return format_scalar(self)


def as_cyc(x: Scalarish, conductor: int = 1) -> Cyc:
    if isinstance(x, Cyc):
        if x.conductor == conductor:
            return x
        if x.is_rational():
            return Cyc.rational(x.coeffs[0], conductor)
        return x.embed(conductor)
    return Cyc.rational(x, conductor)


def zeta(n: int) -> Cyc:
    """The primitive root of unity exp(2 pi i / n) in its own power basis."""
    if n <= 2:
        return Cyc.rational(1 if n == 1 else -1, n)
    vec = [_ZERO] * euler_phi(n)
    vec[1] = _ONE
    return Cyc(vec, n)


# -- serialization -------------------------------------------------------------

def format_scalar(x: Cyc) -> str:
    """'a/b' for rationals, '[a0, a1, ...]@N' otherwise."""
    if x.is_rational():
        return str(x.coeffs[0])
    return "[" + ", ".join(str(c) for c in x.coeffs) + f"]@{x.conductor}"


_CYC_RE = re.compile(r"^\s*\[(.*)\]\s*@\s*(\d+)\s*$")


def parse_scalar(text, conductor: int = 1) -> Cyc:
    """Inverse of format_scalar; the result is embedded into ``conductor``."""
    if isinstance(text, (int, Fraction)):
        return Cyc.rational(text, conductor)
    if isinstance(text, Cyc):
        return as_cyc(text, conductor)
    m = _CYC_RE.match(str(text))
    if m:
        parts = [p for p in m.group(1).split(",") if p.strip()]
        val = Cyc([Fraction(p.strip()) for p in parts], int(m.group(2)))
        if conductor % val.conductor:
            L = conductor * val.conductor // math.gcd(conductor, val.conductor)
            raise ValueError(
                f"scalar {text!r} needs conductor {val.conductor}, ambient is "
                f"{conductor} (use {L})"
            )
        return val.embed(conductor)
    return Cyc.rational(Fraction(str(text).strip()), conductor)


# -- valuations and subrings -----------------------------------------------------

def p_valuation(q, p: int):
    """Exponent of p in the rational q; VALUATION_INFINITY for q = 0."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = Fraction(q)
    if q == 0:
        return VALUATION_INFINITY
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class SubringSpec:
    """A decidable subring of a cyclotomic field.

    kind is "Z" (the integers), "Zp" (Z localized at the prime ``p``) or "OK"
    (the cyclotomic integers Z[zeta_N] with N = ``conductor``).
    """

    kind: str
    p: int = 0
    conductor: int = 1

    def __post_init__(self):
        if self.kind not in ("Z", "Zp", "OK"):
            raise ValueError(f"unknown subring kind {self.kind!r}")
        if self.kind == "Zp" and not is_prime(self.p):
            raise ValueError(f"localization needs a prime, got {self.p}")
        if self.kind == "OK" and self.conductor < 1:
            raise ValueError("conductor must be positive")

    @classmethod
    def integers(cls) -> "SubringSpec":
        return cls("Z")

    @classmethod
    def localized_at(cls, p: int) -> "SubringSpec":
        return cls("Zp", p=p)

    @classmethod
    def cyclotomic_integers(cls, n: int) -> "SubringSpec":
        return cls("OK", conductor=n)

    @property
    def field_conductor(self) -> int:
        return self.conductor if self.kind == "OK" else 1

    def __str__(self):
        if self.kind == "Z":
            return "Z"
        if self.kind == "Zp":
            return f"Zp:{self.p}"
        return f"OK:{self.conductor}"


INTEGERS = SubringSpec.integers()


def parse_ring(text: str) -> SubringSpec:
    """Parse 'Z', 'Zp:<p>' or 'OK:<N>'."""
    t = text.strip()
    if t == "Z":
        return INTEGERS
    if t.startswith("Zp:"):
        return SubringSpec.localized_at(int(t[3:]))
    if t.startswith("OK:"):
        return SubringSpec.cyclotomic_integers(int(t[3:]))
    raise ValueError(f"cannot parse ring {text!r}; expected Z, Zp:<p> or OK:<N>")


def _field_contains(big: int, small: int) -> bool:
    # Q(zeta_small) <= Q(zeta_big); Q(zeta_m) = Q(zeta_2m) for odd m
    return big % small == 0 or (big % 2 == 1 and (2 * big) % small == 0)


def in_subring(x: Scalarish, ring: SubringSpec) -> bool:
    """Membership of x in ring.

    Raises IncompatibleField when x does not lie in the field the ring is a
    subring of (an irrational x tested against Z or Z_(p), for instance).
    """
    x = as_cyc(x, x.conductor if isinstance(x, Cyc) else 1)
    d = x.min_conductor()
    if not _field_contains(ring.field_conductor, d):
        raise IncompatibleField(f"{x} is not in the field of {ring}")
    if ring.kind == "Z":
        return x.coeffs[0].denominator == 1
    if ring.kind == "Zp":
        return x.coeffs[0].denominator % ring.p != 0
    # integral power-basis coordinates; Z[zeta_N] is the full ring of integers,
    # and integrality of an element is the same in any cyclotomic field holding it
    return all(c.denominator == 1 for c in x.coeffs)
