import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from ivpoly import qpoly
from ivpoly.errors import (
    DuplicatePointsError,
    NotAMemberError,
    NoWitnessError,
    SiteMismatchError,
    UnitElementError,
    UnsupportedSiteError,
    ZeroElementError,
)
from ivpoly.intpoly import (
    FiniteSite,
    IVPoly,
    binomial,
    constant,
    divide,
    divisors,
    factorizations,
    find_irreducible_divisor,
    fixed_divisor,
    from_binomial_basis,
    from_json_dict,
    is_irreducible,
    is_member,
    ivpoly,
    length_profile,
    pulling_sequence,
    to_binomial_basis,
    to_json_dict,
    vanishing_nonatomic_witness,
)

X_ON_0 = ivpoly([0, 1], FiniteSite((0,)))


class TestMembership:
    def test_binomial_is_member(self):
        assert is_member(ivpoly([0, F(-1, 2), F(1, 2)]))

    def test_half_x_not_member_on_z(self):
        assert not is_member(ivpoly([0, F(1, 2)]))

    def test_half_x_member_on_even_site(self):
        assert is_member(ivpoly([0, F(1, 2)], FiniteSite((0, 2))))

    def test_all_binomials(self):
        assert all(is_member(binomial(n)) for n in range(12))


class TestBinomialBasis:
    def test_x_squared(self):
        assert to_binomial_basis(ivpoly([0, 0, 1])).deltas == (F(0), F(1), F(2))

    def test_constant(self):
        assert to_binomial_basis(constant(F(7, 3))).deltas == (F(7, 3),)

    def test_basis_vector(self):
        assert to_binomial_basis(binomial(6)).deltas == tuple(F(int(j == 6)) for j in range(7))

    def test_inverse_bijections(self):
        f = ivpoly([F(1, 3), F(-2, 7), F(5)])
        assert from_binomial_basis(to_binomial_basis(f)).coeffs == f.coeffs
        deltas = [F(3), F(-1, 2), F(9)]
        assert to_binomial_basis(from_binomial_basis(deltas)).deltas == tuple(deltas)

    @given(st.lists(st.fractions(min_value=-30, max_value=30, max_denominator=720), min_size=1, max_size=13))
    @settings(max_examples=150)
    def test_roundtrip_random(self, coeffs):
        f = ivpoly(coeffs)
        assert from_binomial_basis(to_binomial_basis(f)).coeffs == f.coeffs


class TestFixedDivisor:
    def test_x_squared_minus_x(self):
        assert fixed_divisor(ivpoly([0, -1, 1])) == 2

    def test_falling_factorial(self):
        f = binomial(6).scale(720)
        assert fixed_divisor(f) == 720

    def test_constant(self):
        assert fixed_divisor(constant(7)) == 7

    def test_zero_rejected(self):
        with pytest.raises(ZeroElementError):
            fixed_divisor(ivpoly([]))

    def test_agrees_with_value_sampling(self):
        rng = random.Random(5)
        from math import gcd

        for _ in range(50):
            coeffs = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))]
            if not any(coeffs):
                continue
            f = ivpoly(coeffs)
            sampled = gcd(*(int(f(k)) for k in range(-25, 26)))
            assert fixed_divisor(f) == sampled


class TestPullingSequence:
    def test_small_products(self):
        assert pulling_sequence([0, 1, 2]).values == (1, 1, 2)
        assert pulling_sequence([0, 1]).values == (1, 1)
        assert pulling_sequence([0, 1, 2, 3]).values == (1, 1, 2, 12)

    def test_duplicates_rejected(self):
        with pytest.raises(DuplicatePointsError):
            pulling_sequence([1, 1])

    def test_pulls_members_into_integer_coefficients(self):
        rng = random.Random(17)
        for _ in range(100):
            size = rng.randint(1, 6)
            points = rng.sample(range(-20, 21), size)
            values = [rng.randint(-40, 40) for _ in range(size)]
            coeffs = qpoly.lagrange(points, [F(v) for v in values])
            if qpoly.is_zero(coeffs):
                continue
            f = IVPoly(coeffs, FiniteSite(tuple(points)))
            d = pulling_sequence(points).values[f.degree]
            assert qpoly.int_coeffs(qpoly.scale(f.coeffs, d)) is not None


class TestDivide:
    def test_hf_identity_quotient(self):
        six_c6 = binomial(6).scale(6)
        q = divide(six_c6, ivpoly([-5, 1]))
        assert q is not None and q.coeffs == binomial(5).coeffs

    def test_divide_by_unit(self):
        f = ivpoly([3, 1])
        assert divide(f, constant(1)).coeffs == f.coeffs

    def test_halving_needs_membership(self):
        assert divide(ivpoly([0, -1, 1]), constant(2)).coeffs == binomial(2).coeffs
        assert divide(ivpoly([0, 1]), constant(2)) is None

    def test_zero_divisor_rejected(self):
        with pytest.raises(ZeroElementError):
            divide(ivpoly([1]), ivpoly([]))

    def test_site_mismatch_rejected(self):
        with pytest.raises(SiteMismatchError):
            divide(ivpoly([0, 1]), X_ON_0)


class TestDivisors:
    def test_x_squared_minus_x_classes(self):
        dl = divisors(ivpoly([0, -1, 1]))
        expected = {
            (F(1),),
            (F(2),),
            (F(0), F(1)),
            (F(-1), F(1)),
            (F(0), F(-1, 2), F(1, 2)),
            (F(0), F(-1), F(1)),
        }
        assert {d.coeffs for d in dl.divisors} == expected

    def test_unit_has_one_class(self):
        assert [d.coeffs for d in divisors(constant(1)).divisors] == [(F(1),)]

    def test_hf_example_contains_named_divisors(self):
        six_c6 = binomial(6).scale(6)
        coeffs = {d.coeffs for d in divisors(six_c6).divisors}
        for named in (constant(2), constant(3), ivpoly([-5, 1]), binomial(5), binomial(6)):
            assert named.coeffs in coeffs

    def test_every_divisor_divides(self):
        f = ivpoly([0, -2, 0, 2])
        for d in divisors(f).divisors:
            assert divide(f.normalized(), d) is not None

    def test_no_associate_pairs(self):
        f = ivpoly([0, -1, 1])
        ds = [d.coeffs for d in divisors(f).divisors]
        assert len(ds) == len({tuple(abs(c) for c in cs) for cs in ds})

    def test_finite_site_rejected(self):
        with pytest.raises(UnsupportedSiteError):
            divisors(X_ON_0)

    def test_non_member_rejected(self):
        with pytest.raises(NotAMemberError):
            divisors(ivpoly([0, F(1, 2)]))

    def test_rational_coefficient_members_match_bruteforce(self):
        from ivpoly.verify import bruteforce_divisors

        cases = [
            binomial(2).scale(3),
            binomial(3).scale(2),
            binomial(2).mul(ivpoly([-2, 1])),
            binomial(2).mul(binomial(2)),
        ]
        for f in cases:
            mine = tuple(d.coeffs for d in divisors(f).divisors)
            assert mine == tuple(d.coeffs for d in bruteforce_divisors(f))

    def test_binomial_square_has_three_classes(self):
        # x/2 fails membership, so only 1, C(x,2), C(x,2)^2 divide C(x,2)^2
        dl = divisors(binomial(2).mul(binomial(2)))
        assert len(dl.divisors) == 3


class TestIrreducibility:
    def test_binomials(self):
        assert all(is_irreducible(binomial(n)) for n in range(1, 7))

    def test_x_squared_reducible(self):
        assert not is_irreducible(ivpoly([0, 0, 1]))

    def test_ckd_linear(self):
        assert is_irreducible(ivpoly([1, 6], FiniteSite((0, 1))))

    def test_units_rejected(self):
        with pytest.raises(UnitElementError):
            is_irreducible(constant(1))

    def test_finite_site_degree_two_unsupported(self):
        with pytest.raises(UnsupportedSiteError):
            is_irreducible(ivpoly([0, 0, 1], FiniteSite((0, 1))))

    def test_constant_primes_on_finite_site(self):
        site = FiniteSite((0, 3))
        assert is_irreducible(constant(5, site))
        assert not is_irreducible(constant(6, site))

    def test_vanishing_linear_reducible(self):
        assert not is_irreducible(X_ON_0)


class TestFactorizations:
    def test_x_squared_minus_x(self):
        facs = factorizations(ivpoly([0, -1, 1]))
        assert len(facs) == 2
        assert all(z.length == 2 for z in facs)
        part_sets = {tuple(p.coeffs for p in z.parts) for z in facs}
        assert ((F(0), F(-1, 2), F(1, 2)), (F(2),)) in part_sets  # 2 * C(x,2)

    def test_products_reproduce_target(self):
        f = ivpoly([0, -1, 1])
        for z in factorizations(f):
            assert z.product().coeffs == f.normalized().coeffs

    def test_parts_are_irreducible(self):
        for z in factorizations(binomial(2).scale(4)):
            assert all(is_irreducible(p) for p in z.parts)

    def test_irreducible_has_single_factorization(self):
        facs = factorizations(binomial(3))
        assert len(facs) == 1 and facs[0].parts[0].coeffs == binomial(3).coeffs

    def test_constant_semigroup(self):
        facs = factorizations(constant(12))
        assert [sorted(int(p.coeffs[0]) for p in z.parts) for z in facs] == [[2, 2, 3]]

    def test_hf_lengths(self):
        profile = length_profile(binomial(6).scale(6))
        assert {2, 3} <= set(profile.lengths)
        assert profile.elasticity >= F(3, 2)
        assert profile.hfd_violation

    def test_prime_profile(self):
        profile = length_profile(constant(7))
        assert profile.lengths == {1} and profile.elasticity == 1

    def test_degree_four_falling_factorial_lattice(self):
        f = constant(1)
        for i in range(4):
            f = f.mul(ivpoly([-i, 1]))
        assert len(divisors(f).divisors) == 54
        facs = factorizations(f)
        assert len(facs) == 10
        assert {z.length for z in facs} == {4, 5}
        assert all(z.product().coeffs == f.coeffs for z in facs)
        assert all(is_irreducible(p) for z in facs for p in z.parts)


class TestFindIrreducibleDivisor:
    def test_x_on_singleton_site(self):
        assert find_irreducible_divisor(X_ON_0).coeffs == (F(2),)

    def test_hf_example_smallest_prime(self):
        assert find_irreducible_divisor(binomial(6).scale(6)).coeffs == (F(2),)

    def test_prime_constant(self):
        assert find_irreducible_divisor(constant(13)).coeffs == (F(13),)

    def test_primitive_linear_over_z(self):
        d = find_irreducible_divisor(ivpoly([0, 1]))
        assert d.coeffs == (F(0), F(1))

    def test_returned_divisor_divides_and_is_irreducible(self):
        for f in (ivpoly([0, -1, 1]), binomial(4).scale(2), ivpoly([3, 4], FiniteSite((0, 2)))):
            d = find_irreducible_divisor(f)
            assert divide(f.normalized(), d) is not None
            if isinstance(f.site, FiniteSite):
                if d.degree <= 1:
                    assert is_irreducible(d)
            else:
                assert is_irreducible(d)


class TestVanishingWitness:
    def test_x_on_singleton(self):
        w = vanishing_nonatomic_witness(X_ON_0)
        assert w.point == 0
        assert w.half.coeffs == (F(0), F(1, 2))
        assert is_member(w.half)
        assert w.complete_proof and w.splits_for_all_integers

    def test_two_point_site(self):
        w = vanishing_nonatomic_witness(ivpoly([0, -1, 1], FiniteSite((0, 1))))
        assert w.point == 0 and w.vanishing_points == (0, 1)
        assert w.splits_for_all_integers and not w.complete_proof

    def test_nonvanishing_rejected(self):
        with pytest.raises(NoWitnessError):
            vanishing_nonatomic_witness(ivpoly([-1, 1], FiniteSite((0,))))

    def test_odd_value_blocks_the_split(self):
        with pytest.raises(NoWitnessError):
            vanishing_nonatomic_witness(ivpoly([0, 1], FiniteSite((0, 1))))


class TestSerialization:
    def test_roundtrip_z(self):
        f = ivpoly([F(1, 2), F(-3)])
        assert from_json_dict(to_json_dict(f)).coeffs == f.coeffs

    def test_roundtrip_finite(self):
        f = ivpoly([1, 2], FiniteSite((3, -1)))
        back = from_json_dict(to_json_dict(f))
        assert back.site == f.site and back.coeffs == f.coeffs
