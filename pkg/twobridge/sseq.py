"""
S-sequences, cyclic S-sequences and the symmetric decomposition of CS(r).

The S-sequence of a reduced word lists the lengths of its maximal runs of
letters with equal exponent sign.  For a slope r = q/p the sequence S(r) of
the relator u_r also has the closed form s_j = ⌊jp/q⌋_* - ⌊(j-1)p/q⌋_*, where
⌊x⌋_* is the greatest integer strictly smaller than x.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import DecompositionError, DomainError
from .rational import ContinuedFraction, ExtendedRational, interval_endpoints, predecessor
from .word import CyclicWord, Word, least_rotation, relator


class SSequence:
    """A finite sequence of positive integers read left to right."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[int] = ()):
        terms = tuple(int(t) for t in terms)
        if any(t < 1 for t in terms):
            raise DomainError(f"S-sequence terms must be positive, got {list(terms)}")
        self._terms = terms

    @property
    def terms(self) -> Tuple[int, ...]:
        return self._terms

    def is_symmetric(self) -> bool:
        return self._terms == self._terms[::-1]

    def reversed(self) -> "SSequence":
        return SSequence(self._terms[::-1])

    def __add__(self, other: "SSequence") -> "SSequence":
        return SSequence(self._terms + tuple(other))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self._terms)

    def __getitem__(self, index):
        return self._terms[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SSequence):
            return self._terms == other._terms
        if isinstance(other, (tuple, list)):
            return self._terms == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __str__(self) -> str:
        return "(" + ",".join(str(t) for t in self._terms) + ")"

    def __repr__(self) -> str:
        return f"SSequence({list(self._terms)})"


class CyclicSSequence:
    """An S-sequence considered up to rotation; canonical form is the least rotation."""

    __slots__ = ("_representative", "_canonical")

    def __init__(self, terms: Union[SSequence, Iterable[int]]):
        self._representative = terms if isinstance(terms, SSequence) else SSequence(terms)
        self._canonical = None

    @property
    def representative(self) -> SSequence:
        return self._representative

    @property
    def terms(self) -> Tuple[int, ...]:
        return self._representative.terms

    @property
    def canonical(self) -> SSequence:
        if self._canonical is None:
            terms = self._representative.terms
            start = least_rotation(terms)
            self._canonical = SSequence(terms[start:] + terms[:start])
        return self._canonical

    def reversed(self) -> "CyclicSSequence":
        return CyclicSSequence(self._representative.reversed())

    def __len__(self) -> int:
        return len(self._representative)

    def __iter__(self) -> Iterator[int]:
        return iter(self._representative)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclicSSequence):
            return len(self) == len(other) and self.canonical == other.canonical
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __str__(self) -> str:
        return "((" + ",".join(str(t) for t in self.canonical) + "))"

    def __repr__(self) -> str:
        return f"CyclicSSequence({list(self._representative.terms)})"


class Decomposition:
    """
    The splitting CS(r) = ((S1, S2, S1, S2)) into two palindromic blocks.

    S1 is empty exactly when r = [m1]; otherwise it begins and ends with
    m1 + 1, and S2 always begins and ends with m1.
    """

    __slots__ = ("s1", "s2")

    def __init__(self, s1: Iterable[int], s2: Iterable[int]):
        self.s1 = s1 if isinstance(s1, SSequence) else SSequence(s1)
        self.s2 = s2 if isinstance(s2, SSequence) else SSequence(s2)

    def as_cyclic(self) -> CyclicSSequence:
        return CyclicSSequence(self.s1 + self.s2 + self.s1 + self.s2)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Decomposition):
            return self.s1 == other.s1 and self.s2 == other.s2
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.s1, self.s2))

    def __repr__(self) -> str:
        return f"Decomposition(s1={list(self.s1)}, s2={list(self.s2)})"


def _run_lengths(letters: Sequence[int]) -> List[int]:
    runs: List[int] = []
    previous_sign = 0
    for letter in letters:
        sign = 1 if letter > 0 else -1
        if sign == previous_sign:
            runs[-1] += 1
        else:
            runs.append(1)
            previous_sign = sign
    return runs


def s_sequence(w: Word) -> SSequence:
    if not len(w):
        raise DomainError("The S-sequence is defined for nonempty words")
    return SSequence(_run_lengths(w.letters))


def cyclic_s_sequence(w: CyclicWord) -> CyclicSSequence:
    letters = w.representative.letters
    if not letters:
        raise DomainError("The cyclic S-sequence is defined for nonempty cyclic words")
    runs = _run_lengths(letters)
    # The first and last runs join around the cycle when their signs agree.
    if len(runs) > 1 and (letters[0] > 0) == (letters[-1] > 0):
        runs[0] += runs.pop()
    return CyclicSSequence(runs)


def floor_star(numerator: int, denominator: int) -> int:
    """The greatest integer strictly smaller than numerator/denominator (denominator > 0)."""
    return -((-numerator) // denominator) - 1


def slope_sseq(r: ExtendedRational) -> SSequence:
    """
    S(r) for 0 < r = q/p <= 1 by the floor-star formula; it has 2q terms summing to 2p.
    """
    if r.is_infinite or not (0 < r <= 1):
        raise DomainError(f"The S-sequence of a slope needs 0 < r <= 1, got {r}")
    q, p = r.numerator, r.denominator
    bounds = [floor_star(j * p, q) for j in range(2 * q + 1)]
    return SSequence(bounds[j] - bounds[j - 1] for j in range(1, 2 * q + 1))


def slope_cs(r: ExtendedRational) -> CyclicSSequence:
    return CyclicSSequence(slope_sseq(r))


def word_cs(r: ExtendedRational) -> CyclicSSequence:
    """CS(r) read off the relator word instead of the closed form."""
    return cyclic_s_sequence(CyclicWord(relator(r)))


def recurrence_up(cs_pred: CyclicSSequence) -> CyclicSSequence:
    """CS(r) from CS(r̃) when m1 >= 2: every term grows by one."""
    return CyclicSSequence(t + 1 for t in cs_pred)


def _flip_terms(terms: Iterable[int]) -> List[int]:
    flipped: List[int] = []
    for a in terms:
        flipped.append(2)
        flipped.extend([1] * (a - 2))
    return flipped


def recurrence_flip(cs_pred: CyclicSSequence) -> Tuple[CyclicSSequence, CyclicSSequence]:
    """
    The two candidates for CS(r) from CS(r̃) when m1 = 1.

    Each term a of CS(r̃) becomes (2, (a - 2)<1>), read forwards for the first
    candidate and backwards for the second.

    Raises:
        DomainError: If some term of cs_pred is smaller than 2.
    """
    terms = cs_pred.terms
    if any(a < 2 for a in terms):
        raise DomainError(f"Every term must be at least 2 to flip, got {list(terms)}")
    return CyclicSSequence(_flip_terms(terms)), CyclicSSequence(_flip_terms(reversed(terms)))


def _lift(cf: ContinuedFraction, s1: Tuple[int, ...], s2: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """One inductive step: the blocks of cf from the blocks of its predecessor."""
    if cf[0] >= 2:
        return tuple(a + 1 for a in s1), tuple(a + 1 for a in s2)
    if len(cf) == 2:
        return (2,), (1,) * (cf[1] - 1)
    new_s1 = _flip_terms(s2) + [2]
    new_s2 = [1] * (s1[0] - 2) + _flip_terms(s1[1:])
    return tuple(new_s1), tuple(new_s2)


@lru_cache(maxsize=4096)
def decompose(cf: ContinuedFraction) -> Decomposition:
    """
    Builds ((S1, S2, S1, S2)) by walking the predecessor chain down to [m] and back up.

    The result is checked against CS(r); a mismatch is an internal error.

    Raises:
        DecompositionError: If the constructed blocks do not reproduce CS(r).
    """
    chain = [cf]
    while len(chain[-1]) > 1:
        chain.append(predecessor(chain[-1]))
    s1: Tuple[int, ...] = ()
    s2: Tuple[int, ...] = (chain[-1][0],)
    for step in reversed(chain[:-1]):
        s1, s2 = _lift(step, s1, s2)
    decomposition = Decomposition(s1, s2)
    _check_decomposition(cf, decomposition)
    logging.debug(f"Decomposed {cf}: S1={list(s1)} S2={list(s2)}")
    return decomposition


def _check_decomposition(cf: ContinuedFraction, decomposition: Decomposition) -> None:
    s1, s2, m1 = decomposition.s1, decomposition.s2, cf[0]
    problems = []
    if not (s1.is_symmetric() and s2.is_symmetric()):
        problems.append("blocks are not symmetric")
    if len(cf) == 1:
        if len(s1):
            problems.append("S1 must be empty for k = 1")
    elif not len(s1) or s1[0] != m1 + 1 or s1[-1] != m1 + 1:
        problems.append(f"S1 must begin and end with {m1 + 1}")
    if not len(s2) or s2[0] != m1 or s2[-1] != m1:
        problems.append(f"S2 must begin and end with {m1}")
    if decomposition.as_cyclic() != slope_cs(cf.value):
        problems.append("((S1,S2,S1,S2)) differs from CS(r)")
    if problems:
        raise DecompositionError(f"Decomposition of {cf} failed: {'; '.join(problems)} ({decomposition!r})")


def _match_positions(text: Sequence[int], pattern: Sequence[int]) -> List[int]:
    """Knuth-Morris-Pratt: every start index of pattern in text."""
    failure = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = failure[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        failure[i] = k
    positions = []
    k = 0
    for i, item in enumerate(text):
        while k and item != pattern[k]:
            k = failure[k - 1]
        if item == pattern[k]:
            k += 1
        if k == len(pattern):
            positions.append(i - k + 1)
            k = failure[k - 1]
    return positions


def count_cyclic_occurrences(cs: CyclicSSequence, pattern: Union[SSequence, Sequence[int]]) -> int:
    """
    Counts the rotations of cs that begin with pattern (the cycle is read periodically).

    Raises:
        DomainError: For an empty pattern.
    """
    pattern = tuple(pattern)
    if not pattern:
        raise DomainError("Cannot count occurrences of an empty pattern")
    terms = cs.terms
    n = len(terms)
    if n == 0:
        return 0
    span = n + len(pattern) - 1
    text = (terms * (span // n + 1))[:span]
    return sum(1 for position in _match_positions(text, pattern) if position < n)


def decomposition_occurrences(cf: ContinuedFraction) -> Dict[str, Optional[int]]:
    """How often S1, S2, (S1,S2) and (S2,S1) occur in CS(r); S1 is None when empty."""
    decomposition = decompose(cf)
    cs = slope_cs(cf.value)
    s1, s2 = decomposition.s1, decomposition.s2
    return {
        "S1": count_cyclic_occurrences(cs, s1) if len(s1) else None,
        "S2": count_cyclic_occurrences(cs, s2),
        "S1S2": count_cyclic_occurrences(cs, s1 + s2),
        "S2S1": count_cyclic_occurrences(cs, s2 + s1),
    }


def _require_proper(r: ContinuedFraction) -> None:
    if r.terms == (1,):
        raise DomainError("This criterion is stated for 0 < r < 1")


def contains_pattern(r: ContinuedFraction, cs_s: CyclicSSequence) -> bool:
    """
    The necessary condition on CS(s) for α_s to be null-homotopic in the complement of K(r).

    For r = [m1] some term of CS(s) must be at least m1; otherwise CS(s) must
    contain (S1, S2) or (S2, S1) as a contiguous block of whole terms.
    """
    _require_proper(r)
    if len(r) == 1:
        return any(t >= r[0] for t in cs_s)
    decomposition = decompose(r)
    for block in (decomposition.s1 + decomposition.s2, decomposition.s2 + decomposition.s1):
        # A subword of a cyclic word is never longer than the word itself.
        if len(block) <= len(cs_s) and count_cyclic_occurrences(cs_s, block):
            return True
    return False


def connection_conditions(r: ContinuedFraction, s: ContinuedFraction) -> bool:
    """
    t >= k, l_i = m_i for i < k, and either l_k >= m_k or (l_k = m_k - 1 and t > k),
    where r = [m1, ..., mk] and s = [l1, ..., lt].
    """
    _require_proper(r)
    m, l = r.terms, s.terms
    k, t = len(m), len(l)
    if t < k or l[: k - 1] != m[: k - 1]:
        return False
    return l[k - 1] >= m[k - 1] or (l[k - 1] == m[k - 1] - 1 and t > k)


def in_open_interval(r: ContinuedFraction, s: ExtendedRational) -> bool:
    """True iff r1 < s < r2, i.e. s lies outside I1 ∪ I2."""
    r1, r2 = interval_endpoints(r)
    return r1 < s < r2


def pattern_word_length(r: ContinuedFraction) -> int:
    """
    The least length of a subword of (u_r^±1) with S-sequence (S1, S2, ℓ), ℓ >= 1.

    Since sum(S1) + sum(S2) = p this is p + 1, more than half of |u_r| = 2p.
    """
    decomposition = decompose(r)
    return sum(decomposition.s1) + sum(decomposition.s2) + 1
