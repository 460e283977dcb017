from functools import cmp_to_key
from typing import List, Optional

from twobridge.rational import (
    ContinuedFraction,
    ExtendedRational,
    cf_expand,
    cf_value,
    interval_endpoints,
    is_farey_neighbor,
    parse_slope,
    precedes,
    predecessor,
    slopes_up_to,
)
from verifiers.base_verifier import BaseVerifier

BASE = ContinuedFraction([1])


def _compare(x: ContinuedFraction, y: ContinuedFraction) -> int:
    if x == y:
        return 0
    return -1 if precedes(x, y) else 1


class RoundTripVerifier(BaseVerifier):
    """Expansion, evaluation and both text forms of every slope agree."""

    def get_cases_to_check(self) -> List[ExtendedRational]:
        return list(slopes_up_to(self.max_denominator))

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        cf = cf_expand(r)
        if cf_value(cf) != r:
            return f"{cf} evaluates to {cf_value(cf)}"
        if parse_slope(str(r)) != r:
            return f"'{r}' parses to {parse_slope(str(r))}"
        if ContinuedFraction.parse(str(cf)) != cf:
            return f"'{cf}' parses to {ContinuedFraction.parse(str(cf))}"
        if parse_slope(str(cf)) != r:
            return f"'{cf}' parses to the slope {parse_slope(str(cf))}"
        return None


class WellOrderingVerifier(BaseVerifier):
    """
    The predecessor chain of every expansion descends strictly to [1], and the
    order agrees on every pair of expansions in the sweep with one ranking of
    them, so it is total, antisymmetric and transitive there.
    """

    def get_cases_to_check(self) -> List[ExtendedRational]:
        slopes = list(slopes_up_to(self.max_denominator))
        expansions = sorted((cf_expand(r) for r in slopes), key=cmp_to_key(_compare))
        self._expansions = expansions
        self._rank = {cf: position for position, cf in enumerate(expansions)}
        return slopes

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        current = cf_expand(r)
        # Each step lowers the term sum or the length, so the chain is short.
        for _ in range(sum(current) + len(current)):
            if current == BASE:
                break
            previous = predecessor(current)
            if not precedes(previous, current) or precedes(current, previous):
                return f"predecessor {previous} of {current} does not strictly precede it"
            current = previous
        else:
            return f"predecessor chain of {cf_expand(r)} does not reach [1]"

        cf = cf_expand(r)
        rank = self._rank[cf]
        for other in self._expansions:
            if precedes(cf, other) != (rank <= self._rank[other]):
                return f"precedes({cf}, {other}) disagrees with the ranking of the sweep"
        return None


class PredecessorVerifier(BaseVerifier):
    def get_cases_to_check(self) -> List[ExtendedRational]:
        return [r for r in slopes_up_to(self.max_denominator) if r != 1]

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        cf = cf_expand(r)
        previous = cf_value(predecessor(cf))
        expected = previous / (1 + previous) if cf[0] >= 2 else 1 - previous
        if expected != r:
            return f"predecessor {predecessor(cf)} of {cf} gives {expected}"
        return None


class EndpointsVerifier(BaseVerifier):
    """r1 and r2 are Farey neighbours of r with 0 <= r1 < r < r2 <= 1."""

    def get_cases_to_check(self) -> List[ExtendedRational]:
        return [r for r in slopes_up_to(self.max_denominator) if r != 1]

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        r1, r2 = interval_endpoints(cf_expand(r))
        if not (0 <= r1 < r < r2 <= 1):
            return f"endpoints {r1}, {r2} do not bracket {r} inside [0, 1]"
        if not (is_farey_neighbor(r, r1) and is_farey_neighbor(r, r2)):
            return f"endpoints {r1}, {r2} are not both Farey neighbours of {r}"
        return None
