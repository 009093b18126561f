"""Monoid rings with nonnegative rational exponents over Z, Q, or F_p.

Elements are finite formal sums of terms c * y^e with exponents in a
Puiseux monoid or a rational cone, kept canonically: strictly decreasing
exponents, no zero coefficients, prime-field coefficients reduced.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    CoefficientRingError,
    NegativeExponentError,
    NotAMemberError,
    RingMismatchError,
    ZeroElementError,
)
from .primes import is_prime
from .puiseux import PuiseuxMonoid, grams_decompose, membership
from .rationals import format_rational, parse_rational


class CoefficientRing:
    """Base class for the supported coefficient rings."""

    tag = "?"

    def coerce(self, c):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def is_unit(self, c) -> bool:
        raise NotImplementedError

    def format(self, c) -> str:
        return str(c)

    def parse(self, text: str):
        raise NotImplementedError


@dataclass(frozen=True)
class IntegerRing(CoefficientRing):
    tag = "Z"

    def coerce(self, c):
        q = Fraction(c)
        if q.denominator != 1:
            raise CoefficientRingError(f"{c} is not an integer")
        return q.numerator

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, c):
        return c in (1, -1)

    def parse(self, text):
        return self.coerce(parse_rational(text))


@dataclass(frozen=True)
class RationalRing(CoefficientRing):
    tag = "Q"

    def coerce(self, c):
        return Fraction(c)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, c):
        return c != 0

    def format(self, c):
        return format_rational(c)

    def parse(self, text):
        return parse_rational(text)


@dataclass(frozen=True)
class PrimeField(CoefficientRing):
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise CoefficientRingError(f"{self.p} is not prime")
        if self.p >= 2**63:
            raise CoefficientRingError("prime fields are limited to machine-word primes")

    @property
    def tag(self) -> str:  # type: ignore[override]
        return f"F{self.p}"

    def coerce(self, c):
        q = Fraction(c)
        if q.denominator % self.p == 0:
            raise CoefficientRingError(f"{c} has no image in F_{self.p}")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def is_unit(self, c):
        return c % self.p != 0

    def parse(self, text):
        return self.coerce(parse_rational(text))


ZZ = IntegerRing()
QQ = RationalRing()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def ring_from_tag(tag: str) -> CoefficientRing:
    if tag == "Z":
        return ZZ
    if tag == "Q":
        return QQ
    if tag.startswith("F") and tag[1:].isdigit():
        return GF(int(tag[1:]))
    raise CoefficientRingError(f"unknown coefficient ring tag {tag!r}")


@dataclass(frozen=True)
class MonoidRingElement:
    """Canonical element: terms (coeff, exponent) with exponents strictly decreasing."""

    ring: CoefficientRing
    terms: tuple[tuple[object, Fraction], ...]

    def is_zero(self) -> bool:
        return not self.terms

    def exponents(self) -> tuple[Fraction, ...]:
        return tuple(e for _, e in self.terms)

    def __add__(self, other: "MonoidRingElement") -> "MonoidRingElement":
        return add(self, other)

    def __mul__(self, other: "MonoidRingElement") -> "MonoidRingElement":
        return mul(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, e in self.terms:
            if e == 0:
                parts.append(self.ring.format(c))
            elif c == 1:
                parts.append(f"y^{format_rational(e)}")
            else:
                parts.append(f"{self.ring.format(c)}*y^{format_rational(e)}")
        return " + ".join(parts)


def canonicalize(raw_terms: Iterable[tuple[object, Fraction]], ring: CoefficientRing) -> MonoidRingElement:
    """Merge equal exponents, drop zeros, sort by decreasing exponent."""
    acc: dict[Fraction, object] = {}
    for c, e in raw_terms:
        e = Fraction(e)
        if e < 0:
            raise NegativeExponentError("exponents must be nonnegative")
        c = ring.coerce(c)
        acc[e] = ring.add(acc[e], c) if e in acc else c
    terms = tuple(
        (c, e) for e, c in sorted(acc.items(), reverse=True) if not _is_zero_coeff(ring, c)
    )
    return MonoidRingElement(ring, terms)


def _is_zero_coeff(ring: CoefficientRing, c) -> bool:
    if isinstance(ring, PrimeField):
        return c % ring.p == 0
    return c == 0


def element(ring: CoefficientRing, terms: Iterable[tuple[object, Fraction]]) -> MonoidRingElement:
    """Convenience constructor through canonicalize."""
    return canonicalize(terms, ring)


def zero(ring: CoefficientRing) -> MonoidRingElement:
    return MonoidRingElement(ring, ())


def one(ring: CoefficientRing) -> MonoidRingElement:
    return element(ring, [(1, Fraction(0))])


def monomial(ring: CoefficientRing, coeff, exponent) -> MonoidRingElement:
    return element(ring, [(coeff, Fraction(exponent))])


def _check_same_ring(a: MonoidRingElement, b: MonoidRingElement) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"mixed coefficient rings {a.ring.tag} and {b.ring.tag}")


def add(a: MonoidRingElement, b: MonoidRingElement) -> MonoidRingElement:
    _check_same_ring(a, b)
    return canonicalize(list(a.terms) + list(b.terms), a.ring)


def mul(a: MonoidRingElement, b: MonoidRingElement) -> MonoidRingElement:
    """Exact convolution product in canonical form."""
    _check_same_ring(a, b)
    raw = [
        (a.ring.mul(ca, cb), ea + eb) for ca, ea in a.terms for cb, eb in b.terms
    ]
    return canonicalize(raw, a.ring)


def power(a: MonoidRingElement, n: int) -> MonoidRingElement:
    out = one(a.ring)
    for _ in range(n):
        out = mul(out, a)
    return out


def is_unit(a: MonoidRingElement, monoid_reduced: bool = True) -> bool:
    """Units are u * y^0 with u a unit coefficient.

    Submonoids of the nonnegative rationals are always reduced (no nonzero
    element is invertible), so the reduced-monoid rule applies throughout;
    the flag is accepted for interface parity.
    """
    del monoid_reduced  # exponent monoids here are reduced either way
    if len(a.terms) != 1:
        return False
    c, e = a.terms[0]
    return e == 0 and a.ring.is_unit(c)


def nu_bar(f: MonoidRingElement) -> Fraction:
    """Minimum dyadic component over the exponents of a nonzero element.

    Exponents must be members of the Grams monoid; their unique
    decompositions supply the dyadic parts.
    """
    if f.is_zero():
        raise ZeroElementError("the zero element has no valuation")
    nus = []
    for _, e in f.terms:
        dec = grams_decompose(e)
        if dec is None:
            raise NotAMemberError(
                f"exponent {format_rational(e)} is not in the Grams monoid"
            )
        nus.append(dec.nu)
    return min(nus)


def pth_root(f: MonoidRingElement, cone_closed: bool = True) -> MonoidRingElement | None:
    """g with g^p = f over F_p, for exponent monoids closed under division by p.

    Coefficient roots are trivial by Fermat (c^p = c in F_p); exponents
    divide by p, which stays in the monoid exactly when it is a rational
    cone -- callers assert that via cone_closed.
    """
    if not isinstance(f.ring, PrimeField):
        raise CoefficientRingError("p-th roots are taken over a prime field")
    if not cone_closed:
        return None
    p = f.ring.p
    return MonoidRingElement(f.ring, tuple((c, e / p) for c, e in f.terms))


def monomial_divides(c: Fraction, f: MonoidRingElement, spec: PuiseuxMonoid) -> bool:
    """Does y^c divide f, i.e. is exponent - c a member for every term?"""
    c = Fraction(c)
    if c < 0:
        raise NegativeExponentError("monomial exponents are nonnegative")
    for _, e in f.terms:
        if e - c < 0 or not membership(spec, e - c).is_member:
            return False
    return True


def to_json_dict(a: MonoidRingElement) -> dict:
    return {
        "ring": a.ring.tag,
        "terms": [[a.ring.format(c), format_rational(e)] for c, e in a.terms],
    }


def from_json_dict(d: dict) -> MonoidRingElement:
    ring = ring_from_tag(d["ring"])
    return element(ring, [(ring.parse(c), parse_rational(e)) for c, e in d["terms"]])
