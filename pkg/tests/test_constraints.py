import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltasimplex import (
    ExponentList,
    check_hibi,
    check_hibi_exponents,
    check_nonprime,
    check_pairing,
    check_stanley,
    check_stanley_exponents,
    check_superadditive,
    delta_from_exponents,
    exponents,
    is_prime,
    least_prime_divisor,
    reduced_pairs,
    run_all_checks,
)


@st.composite
def exponent_lists(draw, max_m=12, max_d=12, min_m=1):
    d = draw(st.integers(1, max_d))
    count = draw(st.integers(min_m - 1, max_m - 1))
    values = tuple(sorted(draw(st.lists(st.integers(1, d), min_size=count, max_size=count))))
    return ExponentList(values, d)


class TestPrimes:
    def test_least_prime_divisor(self):
        assert least_prime_divisor(4) == 2
        assert least_prime_divisor(35) == 5
        assert least_prime_divisor(7) == 7

    def test_least_prime_divisor_rejects_small(self):
        with pytest.raises(ValueError):
            least_prime_divisor(1)

    def test_is_prime(self):
        assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


class TestExponents:
    def test_single_block(self):
        e = exponents((1, 0, 4, 0))
        assert e.values == (2, 2, 2, 2) and e.dim == 3

    def test_composite_example(self):
        e = exponents((1, 1, 0, 2, 0, 0))
        assert e.values == (1, 3, 3) and e.dim == 5

    def test_read_off_positions(self):
        e = exponents((1, 0, 2, 0, 1, 1, 0, 2, 0))
        assert e.values == (2, 2, 4, 5, 7, 7) and e.dim == 8

    def test_leading_entry_must_be_one(self):
        with pytest.raises(ValueError):
            exponents((2, 0, 4))

    def test_negative_entry_rejected(self):
        with pytest.raises(ValueError):
            exponents((1, -1, 4))

    def test_unsorted_exponent_list_rejected(self):
        with pytest.raises(ValueError):
            ExponentList((3, 2), 4)

    @settings(max_examples=200, deadline=None)
    @given(exponent_lists())
    def test_roundtrip_identity(self, e):
        assert exponents(delta_from_exponents(e)) == e


class TestPairing:
    def test_constant_within_bound(self):
        assert check_pairing(ExponentList((2, 2, 2, 2), 3)).ok

    def test_equal_sums_at_the_bound(self):
        assert check_pairing(ExponentList((2, 2, 4, 5, 7, 7), 8)).ok

    def test_unequal_sums(self):
        report = check_pairing(ExponentList((1, 2, 2, 4), 4))
        assert not report.ok
        assert (2, 3) in report.violations

    def test_bound_violation_reported_on_outer_pair(self):
        report = check_pairing(ExponentList((2, 2, 2, 2), 2))
        assert not report.ok and report.violations == ((1, 4),)

    def test_requires_odd_prime(self):
        with pytest.raises(ValueError):
            check_pairing(ExponentList((1, 1, 1), 3))


class TestSuperadditive:
    def test_additive_case(self):
        assert check_superadditive(ExponentList((1, 2, 3, 4), 4)).ok

    def test_known_violator(self):
        report = check_superadditive(ExponentList((2, 2, 4, 5, 7, 7), 8))
        assert not report.ok
        assert (2, 2) in report.violations

    def test_flat_case(self):
        assert check_superadditive(ExponentList((2, 2, 2, 2), 3)).ok

    def test_requires_odd_prime(self):
        with pytest.raises(ValueError):
            check_superadditive(ExponentList((1, 1, 1), 4))


class TestReducedPairs:
    def test_small_primes(self):
        assert reduced_pairs(5) == ((1, 1), (1, 2))
        assert reduced_pairs(7) == ((1, 1), (1, 2), (1, 3), (2, 2))
        assert reduced_pairs(3) == ()

    def test_rejects_non_primes(self):
        with pytest.raises(ValueError):
            reduced_pairs(9)

    def test_reduction_soundness(self):
        # once the pair sums are constant, the reduced set decides the full set
        rng = random.Random(17)
        for p in (5, 7, 11, 13):
            pairs = reduced_pairs(p)
            found_reject = 0
            trials = 0
            while trials < 400:
                d = rng.randint(2, 12)
                constant = rng.randint(2, d + 1)
                half = sorted(
                    rng.randint(max(1, constant - d), constant // 2)
                    for _ in range((p - 1) // 2)
                )
                vals = half + [constant - v for v in reversed(half)]
                e = ExponentList(tuple(vals), d)
                assert check_pairing(e).ok
                full = check_superadditive(e).ok
                reduced = check_superadditive(e, pairs=pairs).ok
                assert full == reduced
                found_reject += not full
                trials += 1
            assert found_reject  # the sample must exercise both verdicts


class TestCumulativeChecks:
    def test_stanley_passes(self):
        assert check_stanley((1, 4, 0)).ok
        assert check_stanley((1, 0, 4, 0)).ok
        assert check_stanley((1, 3, 1)).ok

    def test_stanley_fails(self):
        report = check_stanley((1, 2, 0, 1))
        assert not report.ok and 1 in report.violations

    def test_hibi_passes(self):
        assert check_hibi((1, 0, 4, 0)).ok
        assert check_hibi((1, 4, 0)).ok

    def test_hibi_fails(self):
        report = check_hibi((1, 0, 0, 1))
        assert not report.ok and 0 in report.violations

    @settings(max_examples=300, deadline=None)
    @given(exponent_lists())
    def test_stanley_equivalence(self, e):
        delta = delta_from_exponents(e)
        assert check_stanley(delta).ok == check_stanley_exponents(e).ok

    @settings(max_examples=300, deadline=None)
    @given(exponent_lists())
    def test_hibi_equivalence(self, e):
        delta = delta_from_exponents(e)
        assert check_hibi(delta).ok == check_hibi_exponents(e).ok

    def test_exponent_forms_on_examples(self):
        e = exponents((1, 0, 2, 0, 1, 1, 0, 2, 0))
        assert check_stanley_exponents(e).ok
        assert check_hibi_exponents(e).ok
        e = ExponentList((1, 3, 3), 5)
        assert check_stanley_exponents(e).ok
        assert check_hibi_exponents(e).ok
        additive = ExponentList(tuple(range(1, 7)), 6)
        assert check_stanley_exponents(additive).ok
        assert check_hibi_exponents(additive).ok


class TestNonprime:
    def test_vacuous_for_even_volume(self):
        assert check_nonprime(ExponentList((1, 2, 3), 4)).ok

    def test_single_pair_for_nine(self):
        bad = ExponentList((1, 3, 3, 3, 3, 3, 3, 3), 4)
        report = check_nonprime(bad)
        assert not report.ok and report.violations == ((1, 1),)
        good = ExponentList((2, 3, 3, 3, 3, 3, 3, 3), 4)
        assert check_nonprime(good).ok

    def test_family_exponents_pass(self):
        assert check_nonprime(ExponentList((1, 3, 3, 5, 5), 7)).ok

    def test_rejects_prime_volume(self):
        with pytest.raises(ValueError):
            check_nonprime(ExponentList((1, 2, 2, 4), 4))


class TestRunAllChecks:
    def test_prime_volume_report(self):
        report = run_all_checks((1, 0, 4, 0))
        assert report["volume"] == 5 and report["dim"] == 3
        assert set(report["checks"]) == {
            "stanley",
            "hibi",
            "stanley_exponents",
            "hibi_exponents",
            "pairing",
            "superadditive",
        }
        assert report["all_pass"]

    def test_composite_volume_report(self):
        report = run_all_checks((1, 1, 0, 2, 0, 0))
        assert "nonprime" in report["checks"]
        assert "pairing" not in report["checks"]

    def test_volume_two_report(self):
        report = run_all_checks((1, 0, 1))
        assert set(report["checks"]) == {
            "stanley",
            "hibi",
            "stanley_exponents",
            "hibi_exponents",
        }
