import logging
import threading
from typing import Dict, List, Optional, Tuple

from twobridge.farey import (
    NEGATE,
    TWO_MINUS,
    OrbitPartition,
    is_canonical,
    is_null_homotopic,
    reduce_to_fundamental,
    reflection_in_edge,
)
from twobridge.rational import ExtendedRational, cf_expand, interval_endpoints, slopes_up_to
from twobridge.sseq import contains_pattern, pattern_word_length, slope_cs
from twobridge.word import ZERO_SLOPE_WORD
from verifiers.base_verifier import BaseVerifier

ZERO = ExtendedRational(0)
INFINITY = ExtendedRational.infinity()


class OrbitVerifier(BaseVerifier):
    """
    Orbit reduction lands in I1 ∪ I2 ∪ {∞, r}, replays from its trail, is
    idempotent and invariant under the generators, and matches the pruned
    orbit search whenever the search finds a canonical slope.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # One partition per r answers every s; it is built at most once.
        self._partitions: Dict[ExtendedRational, OrbitPartition] = {}
        self._partition_lock = threading.Lock()

    @property
    def slope_range(self) -> str:
        return super().slope_range + f"; s also 0 and inf; orbit search cap {self.bfs_cap}"

    def get_cases_to_check(self) -> List[Tuple[ExtendedRational, ExtendedRational]]:
        slopes = [ZERO, INFINITY] + list(slopes_up_to(self.max_denominator))
        return [(r, s) for r in self.sample_r for s in slopes]

    def partition(self, r: ExtendedRational) -> OrbitPartition:
        with self._partition_lock:
            if r not in self._partitions:
                cap = max(self.bfs_cap, r.denominator, self.max_denominator)
                self._partitions[r] = OrbitPartition(r, cap)
                logging.info(f"Orbit partition for r = {r}: {len(self._partitions[r])} slopes up to denominator {cap}")
            return self._partitions[r]

    def _oracle(self, r: ExtendedRational, s: ExtendedRational) -> Optional[ExtendedRational]:
        return self.partition(r).canonical(s)

    def check_case(self, case: Tuple[ExtendedRational, ExtendedRational]) -> Optional[str]:
        r, s = case
        result = reduce_to_fundamental(r, s)
        if not is_canonical(r, result.canonical):
            return f"reduction stopped at {result.canonical}, outside I1 ∪ I2 ∪ {{inf, r}}"
        if result.replay() != result.canonical:
            return f"trail maps {s} to {result.replay()}, not {result.canonical}"
        again = reduce_to_fundamental(r, result.canonical)
        if again.canonical != result.canonical or again.trail:
            return f"reducing the canonical slope {result.canonical} again gives {again.canonical} via {len(again.trail)} reflections"
        r1, r2 = interval_endpoints(cf_expand(r))
        for generator in (NEGATE, TWO_MINUS, reflection_in_edge(r, r1), reflection_in_edge(r, r2)):
            image = generator.apply(s)
            if reduce_to_fundamental(r, image).canonical != result.canonical:
                return f"image {image} of {s} under {generator} reduces to a different slope"
        expected = self._oracle(r, s)
        if expected is not None and expected != result.canonical:
            return f"reduction gives {result.canonical}, orbit search gives {expected}"
        return None


class NullHomotopyVerifier(BaseVerifier):
    """
    A null-homotopic loop α_s has CS(s) containing the (S1, S2) pattern of r,
    loops with s ∈ I1 ∪ I2 are never null-homotopic, and the zero slope word
    is shorter than any subword carrying the pattern.
    """

    def get_cases_to_check(self) -> List[Tuple[ExtendedRational, ExtendedRational]]:
        return [(r, s) for r in self.sample_r for s in [ZERO] + list(slopes_up_to(self.max_denominator))]

    def check_case(self, case: Tuple[ExtendedRational, ExtendedRational]) -> Optional[str]:
        r, s = case
        cf = cf_expand(r)
        null_homotopic = is_null_homotopic(r, s)
        if s == ZERO:
            if null_homotopic:
                return "the loop of slope 0 is null-homotopic"
            if len(ZERO_SLOPE_WORD) >= pattern_word_length(cf):
                return f"|u_0| = {len(ZERO_SLOPE_WORD)} is not below the pattern length {pattern_word_length(cf)}"
            return None
        if null_homotopic and not contains_pattern(cf, slope_cs(s)):
            return f"null-homotopic, but CS({s}) = {slope_cs(s)} lacks the pattern of {cf}"
        r1, r2 = interval_endpoints(cf)
        if (s <= r1 or s >= r2) and null_homotopic:
            return f"{s} lies in I1 ∪ I2 but is reported null-homotopic"
        return None
