"""Exact decision procedures in rings of integer-valued polynomials.

Int(Z) is the ring of rational polynomials mapping every integer to an
integer; Int(S,Z), for a finite set S of integers, only constrains the
values on S.  Membership in Int(Z) reduces to integrality of the forward
differences at 0 (the binomial-basis coordinates), which makes divisor
enumeration, irreducibility, factorization sets, and elasticity fully
decidable there.  For finite sites, divisor sets are infinite as soon as a
polynomial vanishes somewhere on the site, so only the operations the
theory makes finite are offered: membership, exact division, linear
irreducibility, irreducible-divisor extraction, and the vanishing
non-atomicity witness.

Units of Int(S,Z) are +1 and -1; associates are normalized to a positive
leading coefficient throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from . import qpoly
from .errors import (
    DuplicatePointsError,
    NotAMemberError,
    NoWitnessError,
    SiteMismatchError,
    UnitElementError,
    UnsupportedSiteError,
    ZeroElementError,
)
from .primes import (
    divisors_from_factorization,
    factorize,
    is_prime,
    merge_factorizations,
    smallest_prime_factor,
)
from .qfactor import factor_rational
from .rationals import format_rational, parse_rational


@dataclass(frozen=True)
class AllIntegers:
    """Site tag for Int(Z)."""

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class FiniteSite:
    """Site tag for Int(S,Z) with S a finite set of integers."""

    points: tuple[int, ...]

    def __post_init__(self):
        pts = tuple(int(s) for s in self.points)
        if not pts:
            raise DuplicatePointsError("a finite site needs at least one point")
        if len(set(pts)) != len(pts):
            raise DuplicatePointsError("site points must be distinct")
        object.__setattr__(self, "points", tuple(sorted(pts)))

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self.points) + "}"


Z_SITE = AllIntegers()
Site = AllIntegers | FiniteSite


@dataclass(frozen=True)
class IVPoly:
    """A rational polynomial together with its ambient site."""

    coeffs: tuple[Fraction, ...]  # lowest degree first, trimmed
    site: Site = Z_SITE

    def __post_init__(self):
        object.__setattr__(self, "coeffs", qpoly.poly(self.coeffs))

    @property
    def degree(self) -> int:
        return qpoly.degree(self.coeffs)

    def is_zero(self) -> bool:
        return qpoly.is_zero(self.coeffs)

    def is_constant(self) -> bool:
        return self.degree <= 0

    def is_unit(self) -> bool:
        return self.coeffs in ((Fraction(1),), (Fraction(-1),))

    def __call__(self, x) -> Fraction:
        return qpoly.eval_at(self.coeffs, x)

    def with_coeffs(self, coeffs) -> "IVPoly":
        return IVPoly(coeffs, self.site)

    def scale(self, k) -> "IVPoly":
        return self.with_coeffs(qpoly.scale(self.coeffs, k))

    def mul(self, other: "IVPoly") -> "IVPoly":
        _check_same_site(self, other)
        return self.with_coeffs(qpoly.mul(self.coeffs, other.coeffs))

    def normalized(self) -> "IVPoly":
        """The associate with positive leading coefficient."""
        if self.is_zero() or self.coeffs[-1] > 0:
            return self
        return self.with_coeffs(qpoly.neg(self.coeffs))

    def sort_key(self):
        return (self.degree, self.coeffs)

    def __str__(self) -> str:
        return qpoly.to_str(self.coeffs)


def ivpoly(coeffs: Iterable, site: Site = Z_SITE) -> IVPoly:
    return IVPoly(qpoly.poly(coeffs), site)


def constant(value, site: Site = Z_SITE) -> IVPoly:
    return IVPoly(qpoly.poly([value]), site)


def binomial(n: int, site: Site = Z_SITE) -> IVPoly:
    """The binomial polynomial x(x-1)...(x-n+1)/n!."""
    cs = qpoly.poly([1])
    fact = 1
    for i in range(n):
        cs = qpoly.mul(cs, qpoly.poly([-i, 1]))
        fact *= i + 1
    return IVPoly(qpoly.scale(cs, Fraction(1, fact)), site)


def _check_same_site(f: IVPoly, g: IVPoly) -> None:
    if f.site != g.site:
        raise SiteMismatchError(f"sites {f.site} and {g.site} differ")


@dataclass(frozen=True)
class BinomialExpansion:
    """Forward differences at 0: coordinates in the binomial basis."""

    deltas: tuple[Fraction, ...]


def to_binomial_basis(f: IVPoly) -> BinomialExpansion:
    """Forward-difference table column: deltas[j] for j = 0..deg f."""
    n = max(f.degree, 0)
    row = [f(k) for k in range(n + 1)]
    deltas = []
    while row:
        deltas.append(row[0])
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
    return BinomialExpansion(tuple(deltas))


def from_binomial_basis(expansion: BinomialExpansion | Iterable, site: Site = Z_SITE) -> IVPoly:
    """Rebuild the polynomial sum deltas[j] * C(x, j)."""
    deltas = (
        expansion.deltas if isinstance(expansion, BinomialExpansion) else tuple(expansion)
    )
    out: qpoly.Coeffs = ()
    for j, d in enumerate(deltas):
        out = qpoly.add(out, qpoly.scale(binomial(j).coeffs, d))
    return IVPoly(out, site)


def is_member(f: IVPoly) -> bool:
    """Does f map its site into the integers?

    On Z this is integrality of every forward difference at 0; on a finite
    site it is integrality of the finitely many values.
    """
    if isinstance(f.site, FiniteSite):
        return all(f(s).denominator == 1 for s in f.site.points)
    return all(d.denominator == 1 for d in to_binomial_basis(f).deltas)


def fixed_divisor(f: IVPoly) -> int:
    """gcd of the values of an integer-coefficient polynomial over all of Z.

    Equals gcd(f(0), ..., f(deg f)): the forward differences at 0 are integer
    combinations of those values and conversely, so both gcds agree with the
    gcd over every integer argument.
    """
    if f.is_zero():
        raise ZeroElementError("the zero polynomial has no fixed divisor")
    ints = qpoly.int_coeffs(f.coeffs)
    if ints is None:
        raise ValueError("fixed divisors are defined for integer coefficients")
    return gcd(*(int(f(k)) for k in range(f.degree + 1)))


@dataclass(frozen=True)
class PullingSequence:
    """Vandermonde products d_n over prefixes of the sample points."""

    points: tuple[int, ...]
    values: tuple[int, ...]  # values[n] multiplies degree-n members into Z[x]


def pulling_sequence(points: Iterable[int]) -> PullingSequence:
    """d_n = prod_{0<=i<j<=n} (s_j - s_i) for each prefix of the points."""
    pts = tuple(int(s) for s in points)
    if not pts:
        raise DuplicatePointsError("need at least one sample point")
    if len(set(pts)) != len(pts):
        raise DuplicatePointsError("sample points must be pairwise distinct")
    values = []
    d = 1
    for n in range(len(pts)):
        for i in range(n):
            d *= pts[n] - pts[i]
        values.append(d)
    return PullingSequence(pts, tuple(values))


def divide(f: IVPoly, g: IVPoly) -> IVPoly | None:
    """f / g within the ring: exact in Q[x] and the quotient stays a member."""
    _check_same_site(f, g)
    if g.is_zero():
        raise ZeroElementError("division by the zero polynomial")
    quot = qpoly.exact_div(f.coeffs, g.coeffs)
    if quot is None:
        return None
    q = f.with_coeffs(quot)
    return q if is_member(q) else None


@dataclass(frozen=True)
class DivisorList:
    """All divisors of the target up to associates, canonically sorted."""

    target: IVPoly
    divisors: tuple[IVPoly, ...]


def _site_value_gcd(int_poly: qpoly.Coeffs, site: Site) -> int:
    """gcd of values over the site's sample points (0 when all values vanish)."""
    if isinstance(site, FiniteSite):
        pts: Iterable[int] = site.points
    else:
        pts = range(qpoly.degree(int_poly) + 1)
    return gcd(*(int(qpoly.eval_at(int_poly, s)) for s in pts))


def _factor_data(f: IVPoly):
    """Q[x] factorization of f plus cached per-sub-multiset products."""
    c, factors = factor_rational(f.coeffs)
    return c, factors


def _submultiset_products(factors) -> list[tuple[tuple[int, ...], qpoly.Coeffs]]:
    """(exponent vector, product polynomial) for every sub-multiset."""
    vecs = [()]
    for _, mult in factors:
        vecs = [v + (e,) for v in vecs for e in range(mult + 1)]
    out = []
    for vec in vecs:
        prod = qpoly.poly([1])
        for (g, _), e in zip(factors, vec):
            for _ in range(e):
                prod = qpoly.mul(prod, qpoly.poly(g))
        out.append((vec, prod))
    return out


def _divisor_candidates(f: IVPoly):
    """Yield every divisor of f (normalized, no associates) with its cofactor scale.

    f = c * G_J * G_Jc with the G's primitive integer polynomials.  A divisor
    is u * G_J with u = a/b in lowest terms; u * G_J is a member iff
    b | gcd of the G_J values, and the cofactor (c b / a) G_Jc is a member
    iff cd * a | |cn| * b * gcd of the G_Jc values.  Both conditions follow
    from gcd-linearity of the value sets, so the enumeration is complete.
    """
    c, factors = _factor_data(f)
    cn, cd = abs(c.numerator), c.denominator
    products = dict(_submultiset_products(factors))
    full = tuple(m for _, m in factors)
    site = f.site
    for vec, gj in products.items():
        comp = tuple(m - e for m, e in zip(full, vec))
        gjc = products[comp]
        dj = _site_value_gcd(gj, site)
        djc = _site_value_gcd(gjc, site)
        if dj == 0 or djc == 0:
            # some G vanishes everywhere on a finite site: constants are
            # unbounded there, so no finite enumeration exists for this J
            raise UnsupportedSiteError(
                "divisor enumeration needs values that do not all vanish"
            )
        for b in divisors_from_factorization(factorize(dj)):
            bound = cn * b * djc
            if bound % cd:
                continue
            afact = merge_factorizations(
                factorize(cn), factorize(b), factorize(djc)
            )
            for a in divisors_from_factorization(afact):
                if gcd(a, b) != 1:
                    continue
                if bound % (cd * a):
                    continue
                yield vec, Fraction(a, b), gj


def divisors(f: IVPoly) -> DivisorList:
    """All non-associate divisors of f in Int(Z), leading coefficients positive.

    Constructive finiteness: candidates are rational multiples of products of
    the Q[x] irreducible factors, with the multiplier's denominator dividing
    the fixed divisor of the product and its numerator bounded through the
    cofactor's membership constraint.
    """
    if not isinstance(f.site, AllIntegers):
        raise UnsupportedSiteError("complete divisor lists exist only over Z")
    if f.is_zero():
        raise ZeroElementError("the zero polynomial is not factored")
    if not is_member(f):
        raise NotAMemberError("f is not integer-valued")
    seen = {}
    for _, u, gj in _divisor_candidates(f):
        d = IVPoly(qpoly.scale(gj, u), f.site)
        seen[d.coeffs] = d
    out = sorted(seen.values(), key=IVPoly.sort_key)
    return DivisorList(f.normalized(), tuple(out))


def is_irreducible(f: IVPoly) -> bool:
    """Irreducibility in Int(S,Z).

    Over Z the complete divisor list decides it.  Over a finite site only
    degrees <= 1 are supported: a constant is irreducible iff it is a prime
    up to sign, and a linear member iff no integer >= 2 divides all of its
    values (in particular any unit value forces constant factors to be
    units).
    """
    _reject_trivial(f)
    if isinstance(f.site, AllIntegers):
        return len(divisors(f).divisors) == 2
    if f.degree >= 2:
        raise UnsupportedSiteError(
            "irreducibility over a finite site is decided for degree <= 1 only"
        )
    values = [f(s) for s in f.site.points]
    if f.degree == 0:
        return is_prime(abs(int(values[0])))
    g = gcd(*(int(v) for v in values))
    return g == 1


def _reject_trivial(f: IVPoly) -> None:
    if f.is_zero():
        raise ZeroElementError("zero is neither reducible nor irreducible")
    if not is_member(f):
        raise NotAMemberError("f is not integer-valued on its site")
    if f.is_unit():
        raise UnitElementError("units are not factored")


@dataclass(frozen=True)
class PolyFactorization:
    """A multiset of irreducibles whose product is the target (up to sign)."""

    parts: tuple[IVPoly, ...]

    @property
    def length(self) -> int:
        return len(self.parts)

    def product(self) -> IVPoly:
        out = constant(1, self.parts[0].site if self.parts else Z_SITE)
        for p in self.parts:
            out = out.mul(p)
        return out

    def __str__(self) -> str:
        return " * ".join(f"({p})" for p in self.parts)


def _irreducible_divisors(divs: tuple[IVPoly, ...]) -> list[IVPoly]:
    """Divisors with no two-nonunit-product expression inside the divisor set."""
    nonunits = [d for d in divs if not d.is_unit()]
    products = set()
    for i, d1 in enumerate(nonunits):
        for d2 in nonunits[i:]:
            prod = qpoly.mul(d1.coeffs, d2.coeffs)
            if prod[-1] < 0:
                prod = qpoly.neg(prod)
            products.add(prod)
    return [d for d in nonunits if d.coeffs not in products]


def factorizations(f: IVPoly, divisor_list: DivisorList | None = None) -> list[PolyFactorization]:
    """The complete finite set of factorizations of f into irreducibles.

    Works over Z via recursive splitting along the divisor enumeration; parts
    are normalized associates in canonical decreasing order, and every
    distinct multiset appears once.  A precomputed divisor_list for f may be
    supplied (the stability checks use this to replay the recursion over an
    independently-derived divisor set).
    """
    _reject_trivial(f)
    if not isinstance(f.site, AllIntegers):
        raise UnsupportedSiteError("complete factorization sets exist only over Z")
    target = f.normalized()
    divs = (divisor_list or divisors(target)).divisors
    irr = sorted(_irreducible_divisors(divs), key=IVPoly.sort_key)

    def rec(g: IVPoly, start: int) -> list[tuple[IVPoly, ...]]:
        out = []
        for idx in range(start, len(irr)):
            d = irr[idx]
            q = divide(g, d)
            if q is None:
                continue
            if q.is_unit():
                out.append((d,))
            else:
                out.extend((d,) + tail for tail in rec(q, idx))
        return out

    seen = []
    for parts in rec(target, 0):
        fac = PolyFactorization(tuple(sorted(parts, key=IVPoly.sort_key, reverse=True)))
        if fac not in seen:
            seen.append(fac)
    return sorted(seen, key=lambda z: (z.length, [p.sort_key() for p in z.parts]))


@dataclass(frozen=True)
class PolyLengthProfile:
    lengths: frozenset[int]
    elasticity: Fraction
    #: witnesses failure of half-factoriality when True
    hfd_violation: bool


def length_profile(f: IVPoly) -> PolyLengthProfile:
    """Factorization lengths of f with elasticity max/min."""
    facs = factorizations(f)
    lengths = frozenset(z.length for z in facs)
    elasticity = Fraction(max(lengths), min(lengths))
    return PolyLengthProfile(lengths, elasticity, len(lengths) > 1)


def _value_gcd(f: IVPoly) -> int:
    """gcd of the integer data of a member: deltas over Z, values on finite sites."""
    if isinstance(f.site, FiniteSite):
        return gcd(*(int(f(s)) for s in f.site.points))
    return gcd(*(int(d) for d in to_binomial_basis(f).deltas))


def find_irreducible_divisor(f: IVPoly) -> IVPoly:
    """Some irreducible divisor of f, deterministically.

    If an integer >= 2 divides every value (gcd 0 means f vanishes on the
    whole finite site, where every integer divides), the smallest prime
    involved is an irreducible constant divisor.  Otherwise no constant
    nonunit divides f, and a nonunit divisor of minimal degree is
    automatically irreducible: a proper splitting would produce a lower
    degree nonunit divisor of f.
    """
    _reject_trivial(f)
    g = _value_gcd(f)
    if g == 0:
        return constant(2, f.site)
    if g >= 2:
        return constant(smallest_prime_factor(g), f.site)
    best: IVPoly | None = None
    for vec, u, gj in _divisor_candidates(f):
        cand = IVPoly(qpoly.scale(gj, u), f.site)
        if cand.is_unit():
            continue
        if best is None or cand.sort_key() < best.sort_key():
            best = cand
    assert best is not None  # f itself is always a candidate
    return best


@dataclass(frozen=True)
class VanishingWitness:
    """Certificate built from a vanishing point of f on its finite site.

    Records: the smallest site point where f vanishes (every factor list of
    f must contain a factor vanishing there), and the verified sample split
    f = 2 * (f/2) with f/2 a member, so f is not irreducible.  When the site
    is a singleton the same splitting applies to every vanishing factor and
    the certificate is a complete proof that f admits no factorization into
    irreducibles; the flags record how much has been established.
    """

    point: int
    vanishing_points: tuple[int, ...]
    half: IVPoly
    #: f/n is a member for every n >= 2 (f vanishes on the whole site)
    splits_for_all_integers: bool
    #: singleton site: the non-factorization argument is complete
    complete_proof: bool


def vanishing_nonatomic_witness(f: IVPoly) -> VanishingWitness:
    """Witness that f sits atop the vanishing-divisor chain of its finite site."""
    if not isinstance(f.site, FiniteSite):
        raise UnsupportedSiteError("the vanishing witness concerns finite sites")
    if f.is_zero():
        raise ZeroElementError("zero admits no witness")
    if not is_member(f):
        raise NotAMemberError("f is not integer-valued on its site")
    vanishing = tuple(s for s in f.site.points if f(s) == 0)
    if not vanishing:
        raise NoWitnessError("f does not vanish on the site")
    half = f.scale(Fraction(1, 2))
    if not is_member(half):
        raise NoWitnessError("the halved polynomial leaves the ring")
    assert half.scale(2).coeffs == f.coeffs
    all_vanish = len(vanishing) == len(f.site.points)
    return VanishingWitness(
        point=vanishing[0],
        vanishing_points=vanishing,
        half=half,
        splits_for_all_integers=all_vanish,
        complete_proof=len(f.site.points) == 1,
    )


def to_json_dict(f: IVPoly) -> dict:
    site = "Z" if isinstance(f.site, AllIntegers) else list(f.site.points)
    return {"coeffs": [format_rational(c) for c in f.coeffs], "site": site}


def from_json_dict(d: dict) -> IVPoly:
    site: Site = Z_SITE if d["site"] == "Z" else FiniteSite(tuple(d["site"]))
    return IVPoly(qpoly.poly([parse_rational(c) for c in d["coeffs"]]), site)
