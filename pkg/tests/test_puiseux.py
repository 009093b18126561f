import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from ivpoly.errors import (
    NegativeInputError,
    NotAMemberError,
    NotDyadicError,
    SpecKindError,
    TruncationError,
)
from ivpoly.primes import odd_prime
from ivpoly.puiseux import (
    DyadicValuation,
    ExplicitMonoid,
    GramsMonoid,
    PrimeReciprocal,
    accp_chain_check,
    atoms_up_to,
    dyadic_divides,
    factorizations,
    grams_decompose,
    length_set,
    membership,
)
from ivpoly.verify import bruteforce_monoid_factorizations

GRAMS = GramsMonoid()


class TestGramsDecompose:
    def test_atom_decomposes_as_itself(self):
        dec = grams_decompose(F(1, 10))
        assert dec.nu == 0 and dec.coeffs == ((1, 1),)

    def test_three_fifths(self):
        dec = grams_decompose(F(3, 5))
        assert dec.nu == F(1, 2) and dec.coeffs == ((1, 1),)
        assert dec.value() == F(3, 5)

    def test_one_twentyfourth_fails(self):
        # c_0 would be 2, leaving the negative remainder -5/8
        assert grams_decompose(F(1, 24)) is None

    def test_deep_prime_power_fails(self):
        assert grams_decompose(F(1, 9)) is None

    def test_negative_rejected(self):
        with pytest.raises(NegativeInputError):
            grams_decompose(F(-1, 3))

    @given(st.lists(st.tuples(st.integers(0, 8), st.integers(1, 40)), max_size=6))
    @settings(max_examples=200)
    def test_reconstruction_roundtrip(self, combo):
        b = sum((mult * GRAMS.generator(i) for i, mult in combo), F(0))
        dec = grams_decompose(b)
        assert dec is not None
        assert dec.value() == b
        for i, c in dec.coeffs:
            assert 0 <= c <= odd_prime(i) - 1

    def test_uniqueness_on_500_random_members(self):
        rng = random.Random(99)
        for _ in range(500):
            combo = [(rng.randint(0, 9), rng.randint(1, 60)) for _ in range(rng.randint(1, 5))]
            b = sum((m * GRAMS.generator(i) for i, m in combo), F(0))
            rng.shuffle(combo)
            b_again = sum((m * GRAMS.generator(i) for i, m in combo), F(0))
            assert b == b_again
            dec, dec_again = grams_decompose(b), grams_decompose(b_again)
            assert dec == dec_again and dec.value() == b


class TestMembership:
    def test_atom_certificate(self):
        res = membership(GRAMS, F(1, 3))
        assert res.certificate.as_dict() == {0: 1}

    def test_zero_empty_certificate(self):
        assert membership(GRAMS, F(0)).certificate.as_dict() == {}

    def test_half_is_five_tenths(self):
        res = membership(GRAMS, F(1, 2))
        assert res.certificate.as_dict() == {1: 5}
        assert res.certificate.verify(GRAMS, F(1, 2))

    def test_non_member_exact(self):
        res = membership(GRAMS, F(1, 9))
        assert not res.is_member and res.exact

    def test_bounded_search_flags_truncation(self):
        res = membership(PrimeReciprocal(truncation=3), F(1, 7))
        assert not res.is_member and not res.exact

    def test_explicit_search_is_exact(self):
        spec = ExplicitMonoid((F(2), F(3)))
        assert membership(spec, F(7)).is_member
        res = membership(spec, F(1))
        assert not res.is_member and res.exact

    def test_truncation_zero_rejected(self):
        with pytest.raises(TruncationError):
            membership(PrimeReciprocal(truncation=0), F(1, 2))

    def test_negative_rejected(self):
        with pytest.raises(NegativeInputError):
            membership(GRAMS, F(-1))

    @given(st.fractions(min_value=0, max_value=4, max_denominator=10**4))
    @settings(max_examples=300)
    def test_certificate_soundness(self, q):
        res = membership(GRAMS, q)
        if res.is_member:
            assert res.certificate.total(GRAMS) == q


class TestGeneratorFamilies:
    def test_grams_generators_closed_form(self):
        # 1/(2^n p_n) over the odd primes 3, 5, 7, 11, ...
        assert [GRAMS.generator(n) for n in range(5)] == [
            F(1, 3), F(1, 10), F(1, 28), F(1, 88), F(1, 208)
        ]

    def test_explicit_duplicates_rejected(self):
        with pytest.raises(ValueError):
            ExplicitMonoid((F(1, 2), F(1, 2)))

    def test_explicit_nonpositive_rejected(self):
        with pytest.raises(NegativeInputError):
            ExplicitMonoid((F(0),))


class TestAtoms:
    def test_grams_denominators(self):
        assert atoms_up_to(GRAMS, 100) == [F(1, 3), F(1, 10), F(1, 28), F(1, 88)]

    def test_prime_reciprocal(self):
        assert atoms_up_to(PrimeReciprocal(), 7) == [F(1, 2), F(1, 3), F(1, 5), F(1, 7)]

    def test_explicit_numerical(self):
        assert atoms_up_to(ExplicitMonoid((F(2), F(3))), 1) == [F(2), F(3)]

    def test_generated_sum_is_not_an_atom(self):
        assert atoms_up_to(ExplicitMonoid((F(1), F(2))), 1) == [F(1)]

    def test_dyadic_has_no_atoms(self):
        assert atoms_up_to(DyadicValuation(), 64) == []

    def test_atom_soundness_by_pair_search(self):
        denom = 2 * 3 * 10 * 28 * 88
        for atom in atoms_up_to(GRAMS, 100):
            for k in range(1, int(atom * denom / 2) + 1):
                x = F(k, denom)
                assert not (
                    membership(GRAMS, x).is_member
                    and membership(GRAMS, atom - x).is_member
                ), f"{atom} splits as {x} + {atom - x}"

    def test_bad_bound(self):
        with pytest.raises(NegativeInputError):
            atoms_up_to(GRAMS, 0)

    def test_prime_reciprocal_large_bound(self):
        spec = PrimeReciprocal(truncation=16)
        atoms = atoms_up_to(spec, 100)
        assert atoms == [F(1, p) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                           31, 37, 41, 43, 47, 53)]

    def test_interval_rule_on_rational_points(self):
        # rational points of {0} u [1, oo): atoms are exactly those in [1, 2)
        spec = ExplicitMonoid((F(1), F(3, 2), F(2), F(5, 2), F(3), F(7, 4)))
        assert atoms_up_to(spec, 4) == [F(1), F(3, 2), F(7, 4)]


class TestFactorizations:
    def test_explicit_unit_fractions(self):
        spec = ExplicitMonoid((F(1, 2), F(1, 3), F(1, 5)))
        facs = factorizations(spec, F(1), 6)
        assert sorted(z.length for z in facs) == [2, 3, 5]
        assert all(z.total() == 1 for z in facs)

    def test_atom_has_unique_factorization(self):
        facs = factorizations(GRAMS, F(1, 3), 3)
        assert len(facs) == 1 and facs[0].parts == (F(1, 3),)

    def test_numerical_semigroup(self):
        facs = factorizations(ExplicitMonoid((F(2), F(3))), F(6), 4)
        assert sorted(z.length for z in facs) == [2, 3]

    def test_non_member_rejected(self):
        with pytest.raises(NotAMemberError):
            factorizations(ExplicitMonoid((F(2),)), F(3), 5)

    def test_matches_bruteforce_on_explicit_specs(self):
        rng = random.Random(11)
        for _ in range(25):
            gens = tuple(
                {F(rng.randint(1, 12), rng.randint(1, 6)) for _ in range(rng.randint(1, 4))}
            )
            spec = ExplicitMonoid(gens)
            combo = [rng.randint(0, 3) for _ in gens]
            b = sum((k * g for k, g in zip(combo, gens)), F(0))
            if b == 0 or b.denominator > 60:
                continue
            cap = 8
            mine = sorted(z.parts for z in factorizations(spec, b, cap))
            atoms = atoms_up_to(spec, max(g.denominator for g in gens))
            brute = [
                tuple(sorted(ms, reverse=True))
                for ms in bruteforce_monoid_factorizations(atoms, b, cap)
            ]
            assert mine == sorted(brute)


class TestLengthSets:
    def test_numerical_semigroup_elasticity(self):
        profile = length_set(ExplicitMonoid((F(2), F(3))), F(6), 10)
        assert profile.lengths == {2, 3}
        assert profile.elasticity == F(3, 2)
        assert not profile.is_lower_bound

    def test_atom_profile(self):
        profile = length_set(GRAMS, F(1, 10), 5)
        assert profile.lengths == {1} and profile.elasticity == 1
        assert not profile.is_lower_bound and not profile.infinite

    def test_unit_fraction_spec(self):
        profile = length_set(ExplicitMonoid((F(1, 2), F(1, 3), F(1, 5))), F(1), 10)
        assert profile.lengths == {2, 3, 5} and profile.elasticity == F(5, 2)

    def test_positive_dyadic_part_is_infinite(self):
        profile = length_set(GRAMS, F(1, 2), 5)
        assert profile.lengths == {5}
        assert profile.infinite and profile.is_lower_bound


class TestAccpChain:
    def test_chain_through_ten(self):
        steps = accp_chain_check(GRAMS, 10)
        assert len(steps) == 11
        for step in steps:
            assert step.ascending and step.strict
            assert step.certificate.as_dict() == {step.step + 1: odd_prime(step.step + 1)}

    def test_other_kinds_rejected(self):
        with pytest.raises(SpecKindError):
            accp_chain_check(DyadicValuation(), 5)


class TestDyadicDivides:
    def test_order_is_divisibility(self):
        assert dyadic_divides(F(1, 4), F(1, 2))
        assert dyadic_divides(F(3, 8), F(3, 8))
        assert not dyadic_divides(F(1, 2), F(1, 4))

    def test_non_dyadic_rejected(self):
        with pytest.raises(NotDyadicError):
            dyadic_divides(F(1, 3), F(1, 2))

    @given(
        st.fractions(min_value=0, max_value=8, max_denominator=64),
        st.fractions(min_value=0, max_value=8, max_denominator=64),
    )
    def test_agrees_with_membership_difference(self, q1, q2):
        if q1.denominator & (q1.denominator - 1) or q2.denominator & (q2.denominator - 1):
            return
        divides = dyadic_divides(q1, q2)
        diff_member = q2 - q1 >= 0 and membership(DyadicValuation(), q2 - q1).is_member
        assert divides == diff_member
