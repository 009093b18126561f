"""Exact rational-cone computations in Q[t], t a symbolic transcendental in (0,1).

The cone is generated, up to a truncation index N, by the polynomials
t^n, a_n = 1 - t^(n+1), and b_n = t - t^(n+1) for 1 <= n <= N.  Because t
is transcendental, cone elements are compared coefficientwise in Q[t], so
membership of a target is a finite system of exact linear equations over
the generator weights -- decided here by exact rational LP, with
Fourier-Motzkin elimination available as an independent feasibility oracle.

Truncation semantics: a certificate proves membership outright (it survives
any larger truncation), while infeasibility only certifies nonexistence
within the truncated generator set; results carry the truncation used.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import qpoly
from .errors import DegreeBoundError, IndexRangeError, TruncationError
from .linprog import fm_feasible_eq, simplex_feasible, simplex_solve
from .rationals import format_rational


@dataclass(frozen=True)
class TPoly:
    """A polynomial in t with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", qpoly.poly(self.coeffs))

    @property
    def degree(self) -> int:
        return qpoly.degree(self.coeffs)

    def coefficient(self, d: int) -> Fraction:
        return self.coeffs[d] if d < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "TPoly") -> "TPoly":
        return TPoly(qpoly.add(self.coeffs, other.coeffs))

    def __sub__(self, other: "TPoly") -> "TPoly":
        return TPoly(qpoly.sub(self.coeffs, other.coeffs))

    def __str__(self) -> str:
        return qpoly.to_str(self.coeffs, var="t")


def tpoly(coeffs) -> TPoly:
    return TPoly(qpoly.poly(coeffs))


def t_power(n: int) -> TPoly:
    return TPoly(qpoly.poly([0] * n + [1]))


def a_gen(n: int) -> TPoly:
    """a_n = 1 - t^(n+1)."""
    return TPoly(qpoly.poly([1] + [0] * n + [-1]))


def b_gen(n: int) -> TPoly:
    """b_n = t - t^(n+1)."""
    return TPoly(qpoly.poly([0, 1] + [0] * (n - 1) + [-1]))


@dataclass(frozen=True)
class ConeGenerator:
    label: str
    poly: TPoly


@dataclass(frozen=True)
class ConeSpec:
    """Generators {t^n, a_n, b_n : 1 <= n <= truncation}."""

    truncation: int

    def __post_init__(self):
        if self.truncation < 1:
            raise TruncationError("cone truncation must be at least 1")

    @property
    def degree_bound(self) -> int:
        return self.truncation + 1

    def generators(self) -> tuple[ConeGenerator, ...]:
        return _generators(self.truncation)


@lru_cache(maxsize=None)
def _generators(n_max: int) -> tuple[ConeGenerator, ...]:
    gens = []
    for n in range(1, n_max + 1):
        gens.append(ConeGenerator(f"t^{n}", t_power(n)))
    for n in range(1, n_max + 1):
        gens.append(ConeGenerator(f"a_{n}", a_gen(n)))
    for n in range(1, n_max + 1):
        gens.append(ConeGenerator(f"b_{n}", b_gen(n)))
    return tuple(gens)


@dataclass(frozen=True)
class ConeCertificate:
    """Nonnegative weights over generator labels reproducing the target."""

    weights: tuple[tuple[str, Fraction], ...]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.weights)

    def total(self, spec: ConeSpec) -> TPoly:
        table = {g.label: g.poly for g in spec.generators()}
        acc: qpoly.Coeffs = ()
        for label, w in self.weights:
            acc = qpoly.add(acc, qpoly.scale(table[label].coeffs, w))
        return TPoly(acc)

    def verify(self, spec: ConeSpec, target: TPoly) -> bool:
        return all(w >= 0 for _, w in self.weights) and self.total(spec) == target

    def __str__(self) -> str:
        if not self.weights:
            return "0"
        return " + ".join(
            f"{label}" if w == 1 else f"{format_rational(w)}*{label}"
            for label, w in self.weights
        )


def _coefficient_system(
    spec: ConeSpec, gens: tuple[ConeGenerator, ...], targets: list[TPoly]
) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """Coefficient-matching rows A (per generator block) and right sides."""
    rows = []
    rhs_cols = []
    for d in range(spec.degree_bound + 1):
        rows.append([g.poly.coefficient(d) for g in gens])
    for target in targets:
        rhs_cols.append([target.coefficient(d) for d in range(spec.degree_bound + 1)])
    return rows, rhs_cols


def cone_member(
    target: TPoly, spec: ConeSpec, exclude: frozenset[str] | set[str] = frozenset()
) -> ConeCertificate | None:
    """Exact feasibility of target = sum w_g * g, w_g >= 0, within the truncation.

    ``exclude`` removes generators by label, e.g. to decide whether t lies in
    the cone of the remaining generators.
    """
    if target.degree > spec.degree_bound:
        raise DegreeBoundError(
            f"target degree {target.degree} exceeds the truncation bound "
            f"{spec.degree_bound}"
        )
    gens = tuple(g for g in spec.generators() if g.label not in exclude)
    rows, (rhs,) = _coefficient_system(spec, gens, [target])
    sol = simplex_feasible(rows, rhs)
    if sol is None:
        return None
    weights = tuple((g.label, w) for g, w in zip(gens, sol) if w != 0)
    return ConeCertificate(weights)


def _mass_system(i: int, spec: ConeSpec):
    """Equality system for: c, a_i - c, b_i - c all in the cone.

    Variables are three weight blocks u, v, w (the representations of c,
    a_i - c, and b_i - c); eliminating c leaves u+v summing to a_i and u+w
    summing to b_i, coefficientwise.
    """
    gens = spec.generators()
    k = len(gens)
    rows_a, rhs = _coefficient_system(spec, gens, [a_gen(i), b_gen(i)])
    a_rows = []
    b_rows = []
    for d, base in enumerate(rows_a):
        a_rows.append(base + base + [Fraction(0)] * k)
        b_rows.append(base + [Fraction(0)] * k + base)
    system = a_rows + b_rows
    rhs_all = rhs[0] + rhs[1]
    objective = [Fraction(1)] * k + [Fraction(0)] * (2 * k)
    return system, rhs_all, objective


def common_divisor_mass(i: int, spec: ConeSpec) -> Fraction:
    """Largest total weight of a cone element c with a_i - c and b_i - c in the cone.

    A maximum of 0 certifies that, within the truncation, only c = 0 yields a
    common monomial divisor of y^{a_i} and y^{b_i}.
    """
    if not 1 <= i <= spec.truncation:
        raise IndexRangeError(f"index {i} outside 1..{spec.truncation}")
    system, rhs, objective = _mass_system(i, spec)
    res = simplex_solve(system, rhs, objective, maximize=True)
    if res.status != "optimal":
        raise ArithmeticError(f"mass LP unexpectedly {res.status}")
    return res.value


@dataclass(frozen=True)
class IdfReport:
    """Aggregated verification for one index of the irreducible family."""

    index: int
    truncation: int
    identity_one: bool  # 1 = t^(i+1) + a_i in Q[t]
    identity_t: bool  # t = t^(i+1) + b_i in Q[t]
    mass: Fraction
    only_trivial_common_divisor: bool
    distinct_from_other_indices: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.identity_one
            and self.identity_t
            and self.only_trivial_common_divisor
            and self.distinct_from_other_indices
        )


def idf_family_check(i: int, spec: ConeSpec) -> IdfReport:
    """Verify the three ingredients that make index i of the family irreducible.

    (i) the exponent identities 1 = t^(i+1) + a_i and t = t^(i+1) + b_i hold
    in Q[t]; (ii) the common-divisor mass vanishes within the truncation;
    (iii) the pair (a_i, b_i) differs from every other index's pair.
    """
    if not 1 <= i <= spec.truncation:
        raise IndexRangeError(f"index {i} outside 1..{spec.truncation}")
    one = tpoly([1])
    t = t_power(1)
    identity_one = t_power(i + 1) + a_gen(i) == one
    identity_t = t_power(i + 1) + b_gen(i) == t
    mass = common_divisor_mass(i, spec)
    distinct = all(
        (a_gen(i), b_gen(i)) != (a_gen(j), b_gen(j))
        for j in range(1, spec.truncation + 1)
        if j != i
    )
    return IdfReport(
        index=i,
        truncation=spec.truncation,
        identity_one=identity_one,
        identity_t=identity_t,
        mass=mass,
        only_trivial_common_divisor=(mass == 0),
        distinct_from_other_indices=distinct,
    )


def membership_system_agreement(
    target: TPoly, spec: ConeSpec, exclude: frozenset[str] | set[str] = frozenset()
) -> tuple[bool, bool]:
    """(simplex verdict, Fourier-Motzkin verdict) for one membership system."""
    gens = tuple(g for g in spec.generators() if g.label not in exclude)
    rows, (rhs,) = _coefficient_system(spec, gens, [target])
    simplex = simplex_feasible(rows, rhs) is not None
    fm = fm_feasible_eq(rows, rhs)
    return simplex, fm


def mass_system_agreement(i: int, spec: ConeSpec) -> tuple[bool, bool]:
    """(simplex verdict, Fourier-Motzkin verdict) for one mass-LP base system."""
    system, rhs, _ = _mass_system(i, spec)
    simplex = simplex_feasible(system, rhs) is not None
    fm = fm_feasible_eq(system, rhs)
    return simplex, fm
