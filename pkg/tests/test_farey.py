import pytest
import sys
import os

# Add the parent directory to the sys.path to allow importing the package
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from twobridge.errors import DomainError, ReductionError
from twobridge.farey import (
    INFINITY,
    NEGATE,
    TWO_MINUS,
    OrbitPartition,
    OrbitResult,
    ReflectionMatrix,
    apply_mobius,
    farey_neighbors,
    is_canonical,
    is_null_homotopic,
    normalize_mod_gamma_inf,
    orbit_bfs_oracle,
    orbit_closure,
    reduce_to_fundamental,
    reflection_in_edge,
)
from twobridge.rational import ExtendedRational, cf_expand, interval_endpoints, is_farey_neighbor, parse_slope, slopes_up_to

FIVE_SEVENTEENTHS = parse_slope("5/17")


def q(text):
    return parse_slope(text)


class TestReflections:
    @pytest.mark.parametrize("v2, expected", [
        ("2/7", [[69, -20], [238, -69]]),
        ("3/10", [[101, -30], [340, -101]]),
    ])
    def test_edges_at_five_seventeenths(self, v2, expected):
        assert reflection_in_edge(FIVE_SEVENTEENTHS, q(v2)).to_list() == expected

    def test_edges_at_infinity(self):
        assert NEGATE == ReflectionMatrix(1, 0, 0, -1)
        assert TWO_MINUS == ReflectionMatrix(1, -2, 0, -1)
        assert NEGATE.apply(q("3/4")) == q("-3/4")
        assert TWO_MINUS.apply(q("1/2")) == q("3/2")
        assert NEGATE.apply(INFINITY) == INFINITY

    def test_fixes_both_endpoints(self):
        edge = reflection_in_edge(FIVE_SEVENTEENTHS, q("2/7"))
        assert edge.apply(FIVE_SEVENTEENTHS) == FIVE_SEVENTEENTHS
        assert apply_mobius(edge, q("2/7")) == q("2/7")

    def test_involution(self):
        for r in slopes_up_to(12):
            if r == 1:
                continue
            r1, r2 = interval_endpoints(cf_expand(r))
            for edge in (reflection_in_edge(r, r1), reflection_in_edge(r, r2)):
                for s in [INFINITY, ExtendedRational(0), q("-5/3"), q("7/24"), q("11/4")]:
                    assert edge.apply(edge.apply(s)) == s

    def test_rejects_non_neighbours(self):
        with pytest.raises(DomainError):
            reflection_in_edge(q("1/3"), q("2/3"))

    @pytest.mark.parametrize("entries", [(1, 0, 0, 1), (2, 1, 1, -2), (1, 1, 0, 1)])
    def test_matrix_must_be_a_reflection(self, entries):
        with pytest.raises(DomainError):
            ReflectionMatrix(*entries)

    def test_str(self):
        assert str(NEGATE) == "[[1, 0], [0, -1]]"


class TestNormalization:
    @pytest.mark.parametrize("s, expected", [
        ("inf", "inf"),
        ("1/2", "1/2"),
        ("-3/4", "3/4"),
        ("2", "0"),
        ("5/2", "1/2"),
        ("7/2", "1/2"),
        ("-13/5", "3/5"),
        ("1", "1"),
    ])
    def test_examples(self, s, expected):
        assert normalize_mod_gamma_inf(q(s))[0] == q(expected)

    def test_trail_replays(self):
        for numerator in range(-40, 41):
            for denominator in (1, 2, 3, 7):
                s = ExtendedRational(numerator, denominator)
                normalized, trail = normalize_mod_gamma_inf(s)
                assert 0 <= normalized <= 1
                current = s
                for matrix in trail:
                    current = matrix.apply(current)
                assert current == normalized

    def test_unit_interval_is_left_alone(self):
        assert normalize_mod_gamma_inf(q("3/7")) == (q("3/7"), [])


class TestReduction:
    @pytest.mark.parametrize("s, expected", [
        ("7/24", "3/10"),
        ("8/27", "2/7"),
        ("69/238", "inf"),
        ("-7/24", "3/10"),
        ("5/17", "5/17"),
        ("inf", "inf"),
        ("0", "0"),
        ("1/3", "1/3"),
    ])
    def test_five_seventeenths(self, s, expected):
        result = reduce_to_fundamental(FIVE_SEVENTEENTHS, q(s))
        assert result.canonical == q(expected)
        assert result.replay() == result.canonical

    def test_first_step_uses_the_lower_edge(self):
        result = reduce_to_fundamental(FIVE_SEVENTEENTHS, q("7/24"))
        assert result.trail == (reflection_in_edge(FIVE_SEVENTEENTHS, q("2/7")),)

    def test_one_half(self):
        result = reduce_to_fundamental(q("1/2"), q("3/4"))
        assert result.canonical == INFINITY
        assert result.trail[0].to_list() == [[3, -2], [4, -3]]

    def test_canonical_slopes_reduce_to_themselves(self):
        assert reduce_to_fundamental(FIVE_SEVENTEENTHS, q("3/10")) == OrbitResult(FIVE_SEVENTEENTHS, q("3/10"), q("3/10"), ())

    def test_fuel_runs_out(self):
        with pytest.raises(ReductionError):
            reduce_to_fundamental(FIVE_SEVENTEENTHS, q("7/24"), fuel=1)

    @pytest.mark.parametrize("r", ["1/1", "0", "inf", "4/3"])
    def test_rejects_r_outside_open_unit_interval(self, r):
        with pytest.raises(DomainError):
            reduce_to_fundamental(q(r), q("1/2"))

    def test_sweep_lands_in_canonical_set_and_is_generator_invariant(self):
        for r in [q("1/2"), q("1/3"), q("2/5"), q("3/5"), FIVE_SEVENTEENTHS]:
            r1, r2 = interval_endpoints(cf_expand(r))
            generators = [NEGATE, TWO_MINUS, reflection_in_edge(r, r1), reflection_in_edge(r, r2)]
            for s in [INFINITY, ExtendedRational(0)] + list(slopes_up_to(25)):
                result = reduce_to_fundamental(r, s)
                assert is_canonical(r, result.canonical)
                assert result.replay() == result.canonical
                for generator in generators:
                    assert reduce_to_fundamental(r, generator.apply(s)).canonical == result.canonical


class TestNullHomotopy:
    @pytest.mark.parametrize("r, s, expected", [
        ("5/17", "69/238", True),
        ("5/17", "5/17", True),
        ("5/17", "7/24", False),
        ("5/17", "0", False),
        ("1/2", "3/4", True),
        ("1/2", "0", False),
        ("2/5", "inf", True),
    ])
    def test_examples(self, r, s, expected):
        assert is_null_homotopic(q(r), q(s)) is expected

    def test_slopes_in_the_intervals_are_essential(self):
        for s in slopes_up_to(30):
            if s <= q("2/7") or s >= q("3/10"):
                assert not is_null_homotopic(FIVE_SEVENTEENTHS, s)


class TestOrbitSearch:
    def test_farey_neighbours(self):
        assert farey_neighbors(FIVE_SEVENTEENTHS, 10) == (q("2/7"), q("3/10"))
        for v in farey_neighbors(FIVE_SEVENTEENTHS, 60):
            assert is_farey_neighbor(FIVE_SEVENTEENTHS, v)
            assert 0 < v.denominator <= 60
        assert len(farey_neighbors(q("1/2"), 6)) == 6

    def test_closure_contains_start_and_images(self):
        orbit = orbit_closure(FIVE_SEVENTEENTHS, q("7/24"), 60)
        assert q("7/24") in orbit
        assert q("3/10") in orbit
        assert all(x.is_infinite or 0 <= x <= 1 for x in orbit)
        assert all(x.denominator <= 60 for x in orbit)

    def test_cap_below_the_denominators(self):
        with pytest.raises(DomainError):
            orbit_closure(FIVE_SEVENTEENTHS, q("7/24"), 10)

    @pytest.mark.parametrize("s, expected", [("7/24", "3/10"), ("1/2", "1/2"), ("5/17", "5/17")])
    def test_oracle(self, s, expected):
        assert orbit_bfs_oracle(FIVE_SEVENTEENTHS, q(s), 60) == q(expected)

    def test_oracle_agrees_with_reduction(self):
        for r in [q("1/3"), q("2/5")]:
            for s in slopes_up_to(20):
                expected = orbit_bfs_oracle(r, s, 60)
                if expected is not None:
                    assert expected == reduce_to_fundamental(r, s).canonical


class TestOrbitPartition:
    def test_every_slope_up_to_the_cap_is_a_node(self):
        # (0, 1] plus 0 and ∞
        assert len(OrbitPartition(q("1/2"), 12)) == len(list(slopes_up_to(12))) + 2

    @pytest.mark.parametrize("s, expected", [
        ("7/24", "3/10"),
        ("8/27", "2/7"),
        ("69/238", "inf"),
        ("5/17", "5/17"),
        ("1/2", "1/2"),
        ("-7/24", "3/10"),
        ("41/24", "3/10"),
    ])
    def test_canonical_examples(self, s, expected):
        assert OrbitPartition(FIVE_SEVENTEENTHS, 300).canonical(q(s)) == q(expected)

    def test_parts_contain_the_search_closure(self):
        partition = OrbitPartition(FIVE_SEVENTEENTHS, 60)
        for s in [q("7/24"), q("1/2"), INFINITY, ExtendedRational(0)]:
            assert orbit_closure(FIVE_SEVENTEENTHS, s, 60) <= partition.part(s)
        assert q("3/10") in partition.part(q("7/24"))

    def test_agrees_with_reduction(self):
        for r in [q("1/2"), q("1/3"), q("2/5"), q("3/5"), FIVE_SEVENTEENTHS]:
            partition = OrbitPartition(r, 120)
            for s in [INFINITY, ExtendedRational(0)] + list(slopes_up_to(30)):
                expected = partition.canonical(s)
                if expected is not None:
                    assert expected == reduce_to_fundamental(r, s).canonical
                assert len(partition.canonical_members(s)) <= 1

    def test_canonical_slopes_lie_in_separate_parts(self):
        partition = OrbitPartition(q("1/2"), 80)
        labels = {frozenset(partition.part(x)) for x in [INFINITY, ExtendedRational(0), q("1"), q("1/2")]}
        assert len(labels) == 4

    def test_cap_bounds(self):
        with pytest.raises(DomainError):
            OrbitPartition(FIVE_SEVENTEENTHS, 10)
        with pytest.raises(DomainError):
            OrbitPartition(FIVE_SEVENTEENTHS, 60).canonical(q("69/238"))
