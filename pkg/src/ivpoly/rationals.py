"""Exact rational scalars: parsing, canonical formatting, dyadic tests.

Rationals are plain ``fractions.Fraction`` values throughout the package;
they serialize as lowest-terms strings ("5", "-1/2").
"""
from __future__ import annotations

from fractions import Fraction

from .errors import MalformedRationalError


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or "a" into an exact rational (unicode minus accepted)."""
    if not isinstance(text, str):
        raise MalformedRationalError(f"expected a rational string, got {text!r}")
    cleaned = text.strip().replace("−", "-")
    try:
        q = Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedRationalError(f"malformed rational {text!r}") from exc
    if q.denominator < 0:  # Fraction normalizes; defensive
        q = Fraction(q.numerator, q.denominator)
    return q


def format_rational(q: Fraction) -> str:
    """Canonical lowest-terms string: "n" for integers, else "n/d"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_dyadic(q: Fraction) -> bool:
    """True iff the reduced denominator of q is a power of two."""
    d = Fraction(q).denominator
    return d & (d - 1) == 0


def dyadic_exponent(q: Fraction) -> int:
    """k such that the reduced denominator of dyadic q equals 2**k."""
    d = Fraction(q).denominator
    if d & (d - 1) != 0:
        raise ValueError(f"{q} is not dyadic")
    return d.bit_length() - 1
