import pytest
import sys
import os
import math
from functools import cmp_to_key
from fractions import Fraction

# Add the parent directory to the sys.path to allow importing the package
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from twobridge.errors import DomainError, SlopeParseError
from twobridge.rational import (
    ContinuedFraction,
    ExtendedRational,
    cf_expand,
    cf_value,
    continued_fractions_up_to,
    evaluate_terms,
    interval_endpoints,
    is_farey_neighbor,
    parse_slope,
    precedes,
    predecessor,
    slopes_up_to,
)


def q(text):
    return parse_slope(text)


class TestExtendedRational:
    def test_normalizes_sign_and_common_factors(self):
        assert ExtendedRational(2, -4) == ExtendedRational(-1, 2)
        assert ExtendedRational(6, 4).numerator == 3
        assert ExtendedRational(6, 4).denominator == 2

    def test_infinity_is_stored_as_one_over_zero(self):
        infinity = ExtendedRational(-7, 0)
        assert infinity.is_infinite
        assert (infinity.numerator, infinity.denominator) == (1, 0)
        assert infinity == ExtendedRational.infinity()
        assert -infinity == infinity

    def test_zero_over_zero_is_rejected(self):
        with pytest.raises(DomainError):
            ExtendedRational(0, 0)

    def test_agrees_with_fraction_and_int(self):
        assert ExtendedRational(1, 2) == Fraction(1, 2)
        assert ExtendedRational(3, 1) == 3
        assert hash(ExtendedRational(1, 2)) == hash(Fraction(1, 2))
        assert hash(ExtendedRational(4, 2)) == hash(2)
        assert ExtendedRational.infinity() != 0

    def test_ordering_and_arithmetic_are_exact(self):
        assert q("2/7") < q("7/24") < q("3/10")
        assert q("1/3") + q("1/6") == q("1/2")
        assert 1 - q("2/5") == q("3/5")
        assert q("2/5") / (1 + q("2/5")) == q("2/7")

    def test_finite_value_of_infinity_is_an_error(self):
        with pytest.raises(DomainError):
            ExtendedRational.infinity().to_fraction()

    @pytest.mark.parametrize("text, expected", [
        ("5/17", ExtendedRational(5, 17)),
        ("3/6", ExtendedRational(1, 2)),
        (" 2 / 5 ", ExtendedRational(2, 5)),
        ("-1/3", ExtendedRational(-1, 3)),
        ("4", ExtendedRational(4)),
        ("inf", ExtendedRational.infinity()),
        ("∞", ExtendedRational.infinity()),
        ("1/0", ExtendedRational.infinity()),
        ("[3,2,2]", ExtendedRational(5, 17)),
        ("[2, 1]", ExtendedRational(1, 3)),
    ])
    def test_parse(self, text, expected):
        assert parse_slope(text) == expected

    @pytest.mark.parametrize("text", ["abc", "1/2/3", "", "0/0", "[]", "[2,0]", "[2,x]", "2,2]"])
    def test_parse_rejects_malformed_text(self, text):
        with pytest.raises(SlopeParseError):
            parse_slope(text)

    def test_str(self):
        assert str(q("10/34")) == "5/17"
        assert str(ExtendedRational.infinity()) == "inf"


class TestContinuedFraction:
    @pytest.mark.parametrize("slope, terms", [
        ("1/1", (1,)),
        ("1/2", (2,)),
        ("2/5", (2, 2)),
        ("3/5", (1, 1, 2)),
        ("5/17", (3, 2, 2)),
        ("7/24", (3, 2, 3)),
        ("8/27", (3, 2, 1, 2)),
        ("4/11", (2, 1, 3)),
    ])
    def test_expand_and_evaluate(self, slope, terms):
        cf = cf_expand(q(slope))
        assert cf.terms == terms
        assert cf_value(cf) == q(slope)

    def test_normal_form_folds_a_trailing_one(self):
        assert ContinuedFraction.normalized([2, 1]) == ContinuedFraction([3])
        assert ContinuedFraction.normalized([3, 2, 1]) == (3, 3)
        assert ContinuedFraction.parse("[3,2,1]") == ContinuedFraction([3, 3])

    @pytest.mark.parametrize("terms", [[], [0], [2, 1], [3, -1, 2]])
    def test_rejects_terms_outside_normal_form(self, terms):
        with pytest.raises(DomainError):
            ContinuedFraction(terms)

    @pytest.mark.parametrize("slope", ["0", "3/2", "-1/2", "inf"])
    def test_expand_rejects_slopes_outside_unit_interval(self, slope):
        with pytest.raises(DomainError):
            cf_expand(q(slope))

    def test_empty_truncation_evaluates_to_zero(self):
        assert evaluate_terms(()) == 0

    def test_str(self):
        assert str(cf_expand(q("5/17"))) == "[3,2,2]"

    def test_round_trip_up_to_two_hundred(self):
        for r in slopes_up_to(200):
            cf = cf_expand(r)
            assert cf_value(cf) == r
            assert ContinuedFraction.parse(str(cf)) == cf
            assert parse_slope(str(r)) == r


class TestPredecessor:
    @pytest.mark.parametrize("terms, expected", [
        ((3, 2, 2), (2, 2, 2)),
        ((1, 2, 2), (3, 2)),
        ((1, 2), (3,)),
        ((1, 1, 2), (2, 2)),
        ((2,), (1,)),
    ])
    def test_steps(self, terms, expected):
        assert predecessor(ContinuedFraction(terms)) == expected

    def test_value_relation(self):
        for cf in continued_fractions_up_to(200):
            if cf == (1,):
                continue
            previous = cf_value(predecessor(cf))
            expected = previous / (1 + previous) if cf[0] >= 2 else 1 - previous
            assert expected == cf_value(cf)

    def test_base_has_no_predecessor(self):
        with pytest.raises(DomainError):
            predecessor(ContinuedFraction([1]))

    def test_predecessor_strictly_precedes(self):
        for cf in continued_fractions_up_to(200):
            if cf != (1,):
                assert precedes(predecessor(cf), cf)
                assert not precedes(cf, predecessor(cf))


class TestWellOrdering:
    def test_shorter_expansions_come_first(self):
        assert precedes(ContinuedFraction([9]), ContinuedFraction([1, 2]))
        assert not precedes(ContinuedFraction([1, 2]), ContinuedFraction([9]))

    def test_equal_lengths_compare_lexicographically(self):
        assert precedes(ContinuedFraction([2, 3]), ContinuedFraction([3, 2]))
        assert not precedes(ContinuedFraction([3, 2]), ContinuedFraction([2, 3]))
        assert precedes(ContinuedFraction([3, 2, 2]), ContinuedFraction([3, 2, 3]))

    def test_reflexive_and_total(self):
        expansions = list(continued_fractions_up_to(12))
        for x in expansions:
            assert precedes(x, x)
            for y in expansions:
                if x != y:
                    assert precedes(x, y) != precedes(y, x)

    def test_transitive_on_small_expansions(self):
        expansions = list(continued_fractions_up_to(12))
        for x in expansions:
            for y in expansions:
                if not precedes(x, y):
                    continue
                for z in expansions:
                    if precedes(y, z):
                        assert precedes(x, z), (x, y, z)

    def test_matches_one_ranking_up_to_fifty(self):
        expansions = list(continued_fractions_up_to(50))
        ranked = sorted(expansions, key=cmp_to_key(lambda x, y: 0 if x == y else (-1 if precedes(x, y) else 1)))
        rank = {cf: position for position, cf in enumerate(ranked)}
        assert len(rank) == len(expansions)
        for x in expansions:
            for y in expansions:
                assert precedes(x, y) == (rank[x] <= rank[y])


class TestIntervalEndpoints:
    @pytest.mark.parametrize("slope, r1, r2", [
        ("5/17", "2/7", "3/10"),
        ("2/5", "1/3", "1/2"),
        ("1/2", "0", "1"),
        ("1/3", "0", "1/2"),
        ("2/3", "1/2", "1"),
    ])
    def test_values(self, slope, r1, r2):
        assert interval_endpoints(cf_expand(q(slope))) == (q(r1), q(r2))

    def test_endpoints_are_farey_neighbours_bracketing_r(self):
        for r in slopes_up_to(40):
            if r == 1:
                continue
            r1, r2 = interval_endpoints(cf_expand(r))
            assert 0 <= r1 < r < r2 <= 1
            assert is_farey_neighbor(r, r1)
            assert is_farey_neighbor(r, r2)

    def test_one_has_no_intervals(self):
        with pytest.raises(DomainError):
            interval_endpoints(ContinuedFraction([1]))


def test_farey_neighbours():
    assert is_farey_neighbor(q("5/17"), q("2/7"))
    assert is_farey_neighbor(ExtendedRational.infinity(), q("3"))
    assert not is_farey_neighbor(q("1/3"), q("2/3"))


def test_slopes_are_enumerated_by_denominator_then_numerator():
    assert [str(r) for r in slopes_up_to(4)] == ["1/1", "1/2", "1/3", "2/3", "1/4", "3/4"]
    assert len(list(slopes_up_to(60))) == sum(1 for p in range(1, 61) for k in range(1, p + 1) if math.gcd(k, p) == 1)
