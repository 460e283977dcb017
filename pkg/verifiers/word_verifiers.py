from typing import List, Optional

from twobridge.rational import ExtendedRational, cf_expand, cf_value, predecessor, slopes_up_to
from twobridge.word import CyclicWord, Generator, cyclically_equal, exponent_signs, flip_b, is_cyclically_alternating, relator
from verifiers.base_verifier import BaseVerifier


class RelatorVerifier(BaseVerifier):
    """u_r has length 2p, alternates cyclically, starts with a and carries ε_i in its first half."""

    def get_cases_to_check(self) -> List[ExtendedRational]:
        return list(slopes_up_to(self.max_denominator))

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        u = relator(r)
        p = r.denominator
        if len(u) != 2 * p:
            return f"length {len(u)} instead of {2 * p}"
        if not is_cyclically_alternating(u):
            return f"{u} is not cyclically alternating"
        if u[0] != Generator.A:
            return f"{u} does not start with a"
        signs = [1 if letter > 0 else -1 for letter in u.letters[1:p]]
        if signs != exponent_signs(r):
            return f"exponents {signs} differ from {exponent_signs(r)}"
        return None


class FlipVerifier(BaseVerifier):
    """For r = [1, m2, ..., mk] the flip b -> b^-1 carries u_r~ to u_r or its inverse."""

    def get_cases_to_check(self) -> List[ExtendedRational]:
        return [r for r in slopes_up_to(self.max_denominator) if r != 1 and cf_expand(r)[0] == 1]

    def check_case(self, r: ExtendedRational) -> Optional[str]:
        previous = relator(cf_value(predecessor(cf_expand(r))))
        if flip_b(flip_b(previous)) != previous:
            return f"flipping {previous} twice does not return it"
        flipped = CyclicWord(flip_b(previous))
        target = CyclicWord(relator(r))
        if not (cyclically_equal(flipped, target) or cyclically_equal(flipped, target.inverse())):
            return f"flip of {previous} is {flipped}, not a rotation of {target} or its inverse"
        return None
