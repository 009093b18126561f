"""Additive submonoids of the nonnegative rationals.

Supports exact membership with certificates, atom detection within a
denominator bound, factorizations into atoms with a length cap, length
sets with elasticity, the non-stabilizing principal-ideal chain of the
classical Grams monoid (generated by 1/(2^n p_n) over the odd primes p_n),
and the unique dyadic-plus-residues decomposition of its elements.

Membership is decided in closed form where the monoid structure allows it
(the Grams monoid and the dyadic valuation monoid); the remaining generator
families use bounded search, and results carry an ``exact`` flag so callers
can tell "not a member" apart from "not representable within the truncation".
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    NegativeInputError,
    NotAMemberError,
    NotDyadicError,
    SpecKindError,
    TruncationError,
)
from .primes import factorize, odd_prime, odd_prime_index
from .rationals import dyadic_exponent, format_rational, is_dyadic


class PuiseuxMonoid:
    """Base class for generator families of additive submonoids of Q>=0."""

    #: closed-form membership (no truncation dependence)
    exact = False
    kind = "abstract"

    def generator(self, i: int) -> Fraction:
        raise NotImplementedError

    def search_generators(self) -> tuple[Fraction, ...]:
        """Generators visible to bounded-search operations."""
        raise NotImplementedError

    def generators_with_denominator_up_to(self, bound: int) -> list[tuple[int, Fraction]]:
        """(index, generator) pairs with reduced denominator <= bound."""
        raise NotImplementedError


@dataclass(frozen=True)
class GramsMonoid(PuiseuxMonoid):
    """Generators 1/(2^n p_n), p_n the n-th odd prime (3, 5, 7, 11, ...)."""

    exact = True
    kind = "grams"

    def generator(self, i: int) -> Fraction:
        return Fraction(1, 2**i * odd_prime(i))

    def generators_with_denominator_up_to(self, bound: int) -> list[tuple[int, Fraction]]:
        out = []
        i = 0
        while 2**i * odd_prime(i) <= bound:
            out.append((i, self.generator(i)))
            i += 1
        return out


@dataclass(frozen=True)
class DyadicValuation(PuiseuxMonoid):
    """Generators 1/2^n: the monoid of all nonnegative dyadic rationals."""

    exact = True
    kind = "dyadic"

    def generator(self, i: int) -> Fraction:
        return Fraction(1, 2**i)

    def generators_with_denominator_up_to(self, bound: int) -> list[tuple[int, Fraction]]:
        out = []
        i = 0
        while 2**i <= bound:
            out.append((i, self.generator(i)))
            i += 1
        return out


@dataclass(frozen=True)
class PrimeReciprocal(PuiseuxMonoid):
    """Generators 1/p over the primes p = 2, 3, 5, ..."""

    truncation: int = 16
    kind = "prime-reciprocal"

    def __post_init__(self):
        if self.truncation < 0:
            raise TruncationError("truncation must be nonnegative")

    def generator(self, i: int) -> Fraction:
        from .primes import nth_prime

        return Fraction(1, nth_prime(i))

    def search_generators(self) -> tuple[Fraction, ...]:
        return tuple(self.generator(i) for i in range(self.truncation))

    def generators_with_denominator_up_to(self, bound: int) -> list[tuple[int, Fraction]]:
        return [
            (i, g)
            for i, g in enumerate(self.search_generators())
            if g.denominator <= bound
        ]


@dataclass(frozen=True)
class ExplicitMonoid(PuiseuxMonoid):
    """A finitely generated monoid given by an explicit list of generators."""

    generators: tuple[Fraction, ...]
    #: exact because the full (finite) generator list is searched
    exact = True
    kind = "explicit"

    def __post_init__(self):
        gens = tuple(Fraction(g) for g in self.generators)
        if any(g <= 0 for g in gens):
            raise NegativeInputError("explicit generators must be strictly positive")
        if len(set(gens)) != len(gens):
            raise ValueError("explicit generator lists must be duplicate-free")
        object.__setattr__(self, "generators", gens)

    def generator(self, i: int) -> Fraction:
        return self.generators[i]

    def search_generators(self) -> tuple[Fraction, ...]:
        return self.generators

    def generators_with_denominator_up_to(self, bound: int) -> list[tuple[int, Fraction]]:
        return [(i, g) for i, g in enumerate(self.generators) if g.denominator <= bound]


@dataclass(frozen=True)
class MembershipCertificate:
    """Multiplicities over generator indices whose weighted sum is the query."""

    combo: tuple[tuple[int, int], ...]  # (generator index, multiplicity), index-sorted

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "MembershipCertificate":
        return cls(tuple(sorted((i, m) for i, m in d.items() if m)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.combo)

    def total(self, spec: PuiseuxMonoid) -> Fraction:
        return sum((m * spec.generator(i) for i, m in self.combo), Fraction(0))

    def verify(self, spec: PuiseuxMonoid, q: Fraction) -> bool:
        return self.total(spec) == q


@dataclass(frozen=True)
class MembershipResult:
    """Certificate (or absence) plus whether the verdict is truncation-free."""

    certificate: MembershipCertificate | None
    exact: bool

    @property
    def is_member(self) -> bool:
        return self.certificate is not None


@dataclass(frozen=True)
class GramsDecomposition:
    """q = nu + sum c_i / (2^i p_i) with nu a nonnegative dyadic, 0 <= c_i < p_i."""

    nu: Fraction
    coeffs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.nu < 0 or not is_dyadic(self.nu):
            raise ValueError("nu must be a nonnegative dyadic rational")
        for i, c in self.coeffs:
            if not 0 <= c <= odd_prime(i) - 1:
                raise ValueError(f"coefficient {c} at index {i} out of range")

    def value(self) -> Fraction:
        return self.nu + sum(
            (Fraction(c, 2**i * odd_prime(i)) for i, c in self.coeffs), Fraction(0)
        )


@dataclass(frozen=True)
class Factorization:
    """A multiset of atoms (kept in decreasing order) summing to an element."""

    parts: tuple[Fraction, ...]

    @property
    def length(self) -> int:
        return len(self.parts)

    def total(self) -> Fraction:
        return sum(self.parts, Fraction(0))

    def __str__(self) -> str:
        return " + ".join(format_rational(p) for p in self.parts) or "0"


@dataclass(frozen=True)
class LengthProfile:
    """Factorization lengths found under the cap, with elasticity."""

    lengths: frozenset[int]
    elasticity: Fraction | None
    #: True when lengths above the cap may exist, so elasticity is a lower bound
    is_lower_bound: bool
    #: True when the element provably has unbounded factorization lengths
    infinite: bool = False


@dataclass(frozen=True)
class ChainStep:
    """One step of the principal-ideal chain (1/2^n + M)."""

    step: int
    ascending: bool
    strict: bool
    certificate: MembershipCertificate | None


def grams_decompose(q: Fraction) -> GramsDecomposition | None:
    """Unique decomposition of q in the Grams monoid, or None for non-members.

    For every odd prime p_i in the denominator of q the residue
    c_i = q * 2^i * p_i (mod p_i) clears the p_i-part; q is a member exactly
    when the cleared remainder is a nonnegative dyadic rational.
    """
    q = Fraction(q)
    if q < 0:
        raise NegativeInputError("the monoid lives in the nonnegative rationals")
    coeffs: dict[int, int] = {}
    rest = q
    for p, e in sorted(factorize(q.denominator).items()):
        if p == 2:
            continue
        if e >= 2:
            return None  # p-adic valuation below -1 is unreachable
        i = odd_prime_index(p)
        t = q * 2**i * p
        c = t.numerator * pow(t.denominator, -1, p) % p
        coeffs[i] = c
        rest -= Fraction(c, 2**i * p)
    if rest < 0 or not is_dyadic(rest):
        return None
    return GramsDecomposition(nu=rest, coeffs=tuple(sorted(coeffs.items())))


def grams_nu(q: Fraction) -> Fraction:
    """The dyadic component nu(q) of a Grams-monoid member."""
    dec = grams_decompose(q)
    if dec is None:
        raise NotAMemberError(f"{format_rational(Fraction(q))} is not in the Grams monoid")
    return dec.nu


def _dyadic_certificate(q: Fraction) -> MembershipCertificate:
    k = dyadic_exponent(q)
    return MembershipCertificate.from_dict({k: q.numerator})


def _grams_certificate(dec: GramsDecomposition) -> MembershipCertificate:
    combo: dict[int, int] = {i: c for i, c in dec.coeffs}
    if dec.nu > 0:
        k = dyadic_exponent(dec.nu)
        combo[k] = combo.get(k, 0) + dec.nu.numerator * odd_prime(k)
    return MembershipCertificate.from_dict(combo)


def _bounded_search(gens: tuple[Fraction, ...], q: Fraction) -> dict[int, int] | None:
    """First multiplicity vector with sum q over the given generators, if any.

    Exhaustive over multiplicities bounded by q / generator, with two sound
    prunes: a tail sum over the remaining generators has denominator
    dividing their lcm, and failed (position, remainder) states never
    succeed later.
    """
    order = sorted(range(len(gens)), key=lambda i: gens[i], reverse=True)
    suffix_lcm = [1] * (len(order) + 1)
    for idx in range(len(order) - 1, -1, -1):
        suffix_lcm[idx] = lcm(suffix_lcm[idx + 1], gens[order[idx]].denominator)
    failed: set[tuple[int, Fraction]] = set()

    def rec(pos: int, remaining: Fraction) -> dict[int, int] | None:
        if remaining == 0:
            return {}
        if pos == len(order) or suffix_lcm[pos] % remaining.denominator:
            return None
        key = (pos, remaining)
        if key in failed:
            return None
        g = gens[order[pos]]
        for k in range(int(remaining / g), -1, -1):
            found = rec(pos + 1, remaining - k * g)
            if found is not None:
                if k:
                    found[order[pos]] = k
                return found
        failed.add(key)
        return None

    return rec(0, q)


def membership(spec: PuiseuxMonoid, q: Fraction) -> MembershipResult:
    """Decide q in M with a certificate.

    Exact for the Grams monoid, the dyadic valuation monoid, and explicit
    generator lists; for other kinds absence only means "not representable
    within the truncation" and the result is flagged inexact.
    """
    q = Fraction(q)
    if q < 0:
        raise NegativeInputError("membership queries must be nonnegative")
    if q == 0:
        return MembershipResult(MembershipCertificate(()), True)
    if isinstance(spec, GramsMonoid):
        dec = grams_decompose(q)
        cert = None if dec is None else _grams_certificate(dec)
        return MembershipResult(cert, True)
    if isinstance(spec, DyadicValuation):
        cert = _dyadic_certificate(q) if is_dyadic(q) else None
        return MembershipResult(cert, True)
    gens = spec.search_generators()
    if not gens:
        if isinstance(spec, ExplicitMonoid):
            return MembershipResult(None, True)  # the monoid {0}
        raise TruncationError("bounded search needs a positive truncation")
    combo = _bounded_search(gens, q)
    if combo is None:
        return MembershipResult(None, spec.exact)
    return MembershipResult(MembershipCertificate.from_dict(combo), True)


def _splits_as_sum(spec: PuiseuxMonoid, g: Fraction) -> bool:
    """Does the member g split as x + y with x, y nonzero members?

    In any such split one part can be peeled down to a single generator, so
    it suffices to test g - h for membership over generators h < g.  For the
    Grams monoid the unique decomposition answers directly: g splits unless
    its dyadic part vanishes and its residue weights sum to one.  For the
    dyadic valuation monoid everything halves.  Searched kinds inherit the
    truncation of their membership test.
    """
    if isinstance(spec, GramsMonoid):
        dec = grams_decompose(g)
        if dec is None:
            return False
        return not (dec.nu == 0 and sum(c for _, c in dec.coeffs) == 1)
    if isinstance(spec, DyadicValuation):
        return g > 0
    for h in spec.search_generators():
        rest = g - h
        if rest > 0 and membership(spec, rest).is_member:
            return True
    return False


def atoms_up_to(spec: PuiseuxMonoid, denom_bound: int) -> list[Fraction]:
    """Atoms of M with reduced denominator <= denom_bound, smallest denominator first.

    Every atom of a generated monoid is a generator, so candidates are the
    generators within the bound; each is kept unless it splits as a sum of
    two nonzero members.
    """
    if denom_bound < 1:
        raise NegativeInputError("denominator bound must be at least 1")
    candidates = sorted(
        {g for _, g in spec.generators_with_denominator_up_to(denom_bound)},
        key=lambda g: (g.denominator, g),
    )
    return [g for g in candidates if not _splits_as_sum(spec, g)]


def _usable_atoms(spec: PuiseuxMonoid, b: Fraction, cap: int) -> list[Fraction]:
    """Atoms that can occur in a factorization of b with length <= cap."""
    if isinstance(spec, GramsMonoid):
        idx = set()
        i = 0
        while odd_prime(i) <= cap:
            idx.add(i)
            i += 1
        for p, e in factorize(b.denominator).items():
            if p != 2 and e == 1:
                idx.add(odd_prime_index(p))
        return sorted(
            (spec.generator(i) for i in idx if spec.generator(i) <= b), reverse=True
        )
    if isinstance(spec, DyadicValuation):
        return []  # the dyadic valuation monoid has no atoms
    max_denom = max((g.denominator for g in spec.search_generators()), default=1)
    atoms = atoms_up_to(spec, max_denom)
    return sorted((a for a in atoms if a <= b), reverse=True)


def factorizations(spec: PuiseuxMonoid, b: Fraction, length_cap: int) -> list[Factorization]:
    """All factorizations of b into atoms with length <= length_cap.

    Complete within the cap (and the truncation, for search-based kinds);
    multisets are returned with parts in decreasing order, no duplicates.
    """
    b = Fraction(b)
    if length_cap < 1:
        raise TruncationError("length cap must be at least 1")
    if not membership(spec, b).is_member:
        raise NotAMemberError(f"{format_rational(b)} is not a member")
    if b == 0:
        return [Factorization(())]
    atoms = _usable_atoms(spec, b, length_cap)
    found: list[Factorization] = []

    def rec(pos: int, remaining: Fraction, budget: int, acc: list[Fraction]) -> None:
        if remaining == 0:
            found.append(Factorization(tuple(acc)))
            return
        if pos == len(atoms) or budget == 0:
            return
        g = atoms[pos]
        if remaining > budget * g:
            return  # even the largest remaining atom cannot reach b
        for k in range(min(budget, int(remaining / g)), -1, -1):
            rec(pos + 1, remaining - k * g, budget - k, acc + [g] * k)

    rec(0, b, length_cap, [])
    return found


def length_set(spec: PuiseuxMonoid, b: Fraction, cap: int) -> LengthProfile:
    """Lengths of factorizations found under the cap, with max/min elasticity."""
    b = Fraction(b)
    facs = factorizations(spec, b, cap)
    lengths = frozenset(f.length for f in facs)
    if not lengths:
        return LengthProfile(lengths, None, True)
    lo, hi = min(lengths), max(lengths)
    elasticity = Fraction(hi, lo) if lo else Fraction(1)
    exact, infinite = _length_set_exactness(spec, b, cap, hi)
    return LengthProfile(lengths, elasticity, not exact, infinite)


def _length_set_exactness(
    spec: PuiseuxMonoid, b: Fraction, cap: int, max_found: int
) -> tuple[bool, bool]:
    """(complete, provably infinite) for the discovered length set."""
    if b == 0:
        return True, False
    if isinstance(spec, ExplicitMonoid):
        atoms = _usable_atoms(spec, b, cap)
        if not atoms:
            return False, False
        return cap >= b / min(atoms), False
    if isinstance(spec, GramsMonoid):
        dec = grams_decompose(b)
        if dec is not None and dec.nu == 0:
            # residues force the unique multiplicity vector c_i
            unique_length = sum(c for _, c in dec.coeffs)
            return unique_length <= cap, False
        # a positive dyadic part can be filled by p_n blocks of any index
        return False, True
    return False, False


def accp_chain_check(spec: PuiseuxMonoid, n_max: int) -> list[ChainStep]:
    """Verify the ascending, never-stabilizing chain of ideals (1/2^n + M).

    Step n is ascending iff 1/2^(n+1) is a member (certificate: p_{n+1}
    copies of generator n+1) and strict because the reverse difference is
    negative, hence never a member.
    """
    if not isinstance(spec, GramsMonoid):
        raise SpecKindError("the chain witness is specific to the Grams monoid")
    if n_max < 1:
        raise TruncationError("n_max must be at least 1")
    steps = []
    for n in range(n_max + 1):
        gap = Fraction(1, 2 ** (n + 1))
        res = membership(spec, gap)
        ascending = res.is_member and res.certificate.verify(spec, gap)
        strict = gap - Fraction(1, 2**n) < 0
        steps.append(ChainStep(n, ascending, strict, res.certificate))
    return steps


def dyadic_divides(q1: Fraction, q2: Fraction) -> bool:
    """Divisibility in the valuation monoid of nonnegative dyadics: q1 <= q2."""
    q1, q2 = Fraction(q1), Fraction(q2)
    for q in (q1, q2):
        if q < 0:
            raise NegativeInputError("dyadic divisibility is for nonnegative inputs")
        if not is_dyadic(q):
            raise NotDyadicError(f"{format_rational(q)} is not dyadic")
    return q1 <= q2
