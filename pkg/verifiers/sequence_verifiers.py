from typing import List, Optional

from twobridge.rational import ExtendedRational, cf_expand, cf_value, predecessor, slopes_up_to
from twobridge.sseq import (
    decompose,
    decomposition_occurrences,
    recurrence_flip,
    recurrence_up,
    s_sequence,
    slope_cs,
    slope_sseq,
)
from twobridge.word import relator
from verifiers.base_verifier import BaseVerifier


class HalfRotationVerifier(BaseVerifier):
    """The word route and the floor-star route give the same S(r), which is half-rotation invariant."""

    def get_cases_to_check(self) -> List[ExtendedRational]:
        return list(slopes_up_to(self.max_denominator))

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        q, p = r.numerator, r.denominator
        closed_form = slope_sseq(r)
        from_word = s_sequence(relator(r))
        if closed_form != from_word:
            return f"floor-star gives {closed_form}, the relator gives {from_word}"
        if len(closed_form) != 2 * q or sum(closed_form) != 2 * p:
            return f"{closed_form} has {len(closed_form)} terms summing to {sum(closed_form)}"
        if closed_form[:q] != closed_form[q:]:
            return f"{closed_form} is not invariant under the half-rotation"
        return None


class CsTermsVerifier(BaseVerifier):
    def get_cases_to_check(self) -> List[ExtendedRational]:
        return list(slopes_up_to(self.max_denominator))

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        cf = cf_expand(r)
        cs = slope_cs(r)
        m1 = cf[0]
        if len(cf) == 1:
            if list(cs.terms) != [m1, m1]:
                return f"CS({r}) = {cs}, expected (({m1},{m1}))"
            return None
        values = set(cs.terms)
        if values != {m1, m1 + 1}:
            return f"CS({r}) = {cs} takes the values {sorted(values)}, expected {m1} and {m1 + 1}"
        return None


class RecurrenceVerifier(BaseVerifier):
    """CS(r) from CS(r~): add one to every term when m1 >= 2, flip when m1 = 1."""

    def get_cases_to_check(self) -> List[ExtendedRational]:
        return [r for r in slopes_up_to(self.max_denominator) if r != 1]

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        cf = cf_expand(r)
        previous = slope_cs(cf_value(predecessor(cf)))
        target = slope_cs(r)
        if cf[0] >= 2:
            if recurrence_up(previous) != target:
                return f"adding one to {previous} gives {recurrence_up(previous)}, not {target}"
            return None
        candidates = recurrence_flip(previous)
        if target not in candidates:
            return f"neither flip candidate {[str(c) for c in candidates]} equals {target}"
        return None


class DecompositionVerifier(BaseVerifier):
    """
    CS(r) = ((S1, S2, S1, S2)) with the block invariants, each of S1, S2,
    (S1, S2) and (S2, S1) occurring exactly twice, and the blocks adding up
    to q terms summing to p.
    """

    def get_cases_to_check(self) -> List[ExtendedRational]:
        return list(slopes_up_to(self.max_denominator))

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        cf = cf_expand(r)
        # decompose checks symmetry, boundary terms and the cyclic identity itself.
        decomposition = decompose(cf)
        s1, s2 = decomposition.s1, decomposition.s2
        if sum(s1) + sum(s2) != r.denominator or len(s1) + len(s2) != r.numerator:
            return f"blocks {s1} and {s2} do not account for q = {r.numerator}, p = {r.denominator}"
        occurrences = decomposition_occurrences(cf)
        wrong = {name: count for name, count in occurrences.items() if count is not None and count != 2}
        if wrong:
            return f"occurrence counts {wrong} differ from 2"
        return None
