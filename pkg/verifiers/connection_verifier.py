from typing import List, Optional, Tuple

from twobridge.rational import ExtendedRational, cf_expand, slopes_up_to
from twobridge.sseq import connection_conditions, contains_pattern, in_open_interval, slope_cs
from verifiers.base_verifier import BaseVerifier


class ConnectionVerifier(BaseVerifier):
    """
    For each sample r and every small slope s, the continued fraction conditions
    on s, the test r1 < s < r2 and the (S1, S2) pattern test on CS(s) agree.
    """

    def get_cases_to_check(self) -> List[Tuple[ExtendedRational, ExtendedRational]]:
        return [(r, s) for r in self.sample_r for s in slopes_up_to(self.max_denominator)]

    def check_case(self, case: Tuple[ExtendedRational, ExtendedRational]) -> Optional[str]:
        r, s = case
        cf = cf_expand(r)
        by_terms = connection_conditions(cf, cf_expand(s))
        by_interval = in_open_interval(cf, s)
        by_pattern = contains_pattern(cf, slope_cs(s))
        if not by_terms == by_interval == by_pattern:
            return f"continued fraction test {by_terms}, interval test {by_interval}, pattern test {by_pattern}"
        return None
