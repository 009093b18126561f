"""Dense exact-rational polynomial arithmetic.

Polynomials are tuples of ``Fraction`` coefficients, lowest degree first,
with trailing zeros trimmed; the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Coeffs = tuple[Fraction, ...]


def poly(coeffs) -> Coeffs:
    """Build a trimmed coefficient tuple from any iterable of rationals."""
    return trim(tuple(Fraction(c) for c in coeffs))


def trim(cs) -> Coeffs:
    cs = tuple(cs)
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return cs[:n]


def degree(cs: Coeffs) -> int:
    """Degree, with the zero polynomial mapped to -1."""
    return len(cs) - 1


def is_zero(cs: Coeffs) -> bool:
    return len(cs) == 0


def add(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(tuple(out))


def neg(a: Coeffs) -> Coeffs:
    return tuple(-c for c in a)


def sub(a: Coeffs, b: Coeffs) -> Coeffs:
    return add(a, neg(b))


def scale(a: Coeffs, k) -> Coeffs:
    k = Fraction(k)
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return trim(tuple(out))


def eval_at(cs: Coeffs, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def divmod_exact(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    """Quotient and remainder of a by b over the rationals."""
    if is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coeff = rem[i + len(b) - 1] * inv_lead
        if coeff == 0:
            continue
        q[i] = coeff
        for j, cb in enumerate(b):
            rem[i + j] -= coeff * cb
    return trim(tuple(q)), trim(tuple(rem))


def exact_div(a: Coeffs, b: Coeffs) -> Coeffs | None:
    """a / b when the division is exact in Q[x], else None."""
    q, r = divmod_exact(a, b)
    return q if is_zero(r) else None


def power(a: Coeffs, n: int) -> Coeffs:
    out = poly([1])
    for _ in range(n):
        out = mul(out, a)
    return out


def content_and_primitive(cs: Coeffs) -> tuple[Fraction, tuple[int, ...]]:
    """Write cs = c * g with g a primitive integer polynomial, positive leading.

    Returns (c, g) with g as an integer tuple; raises on the zero polynomial.
    """
    if is_zero(cs):
        raise ValueError("zero polynomial has no primitive part")
    denom = lcm(*(c.denominator for c in cs))
    ints = [int(c * denom) for c in cs]
    g = gcd(*ints)
    sign = 1 if ints[-1] > 0 else -1
    prim = tuple(v // (g * sign) for v in ints)
    return Fraction(g * sign, denom), prim


def int_coeffs(cs: Coeffs) -> tuple[int, ...] | None:
    """Integer coefficients when every coefficient is integral, else None."""
    if all(c.denominator == 1 for c in cs):
        return tuple(c.numerator for c in cs)
    return None


def lagrange(points, values) -> Coeffs:
    """Interpolating polynomial through (points[i], values[i])."""
    if len(points) != len(values):
        raise ValueError("points and values must have equal length")
    if len(set(points)) != len(points):
        raise ValueError("interpolation points must be distinct")
    out: Coeffs = ()
    for i, (xi, yi) in enumerate(zip(points, values)):
        term = poly([yi])
        for j, xj in enumerate(points):
            if j == i:
                continue
            term = mul(term, poly([Fraction(-xj, 1) / (xi - xj), Fraction(1, 1) / (xi - xj)]))
        out = add(out, term)
    return out


def to_str(cs: Coeffs, var: str = "x") -> str:
    """Human-readable form, highest degree first."""
    if is_zero(cs):
        return "0"
    parts = []
    for i in range(len(cs) - 1, -1, -1):
        c = cs[i]
        if c == 0:
            continue
        if i == 0:
            body = str(c)
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            body = f"{mag}{var}" if i == 1 else f"{mag}{var}^{i}"
            if c < 0:
                body = "-" + body
        if not parts:
            parts.append(body)
        elif body.startswith("-"):
            parts.append(f"- {body[1:]}")
        else:
            parts.append(f"+ {body}")
    return " ".join(parts)
