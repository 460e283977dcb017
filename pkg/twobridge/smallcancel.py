"""
Small cancellation conditions C(4) and T(4) for the upper presentation <a, b | u_r>.

A piece is a common prefix of two distinct elements of the symmetrized set
(every cyclic permutation of u_r and of u_r⁻¹).  C(4) asks that no element is
a product of fewer than four pieces; T(4) asks that for any three elements
ρ1, ρ2, ρ3 with no consecutive pair mutually inverse, one of ρ1ρ2, ρ2ρ3, ρ3ρ1
is reduced as written.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError
from .rational import ExtendedRational
from .word import CyclicWord, Word, relator


class SymmetrizedSet:
    """All cyclic permutations of a cyclically reduced word and of its inverse."""

    __slots__ = ("relators", "_texts")

    def __init__(self, relators: Iterable[Word]):
        self.relators: Tuple[Word, ...] = tuple(sorted(set(relators), key=str))
        self._texts = frozenset(str(w) for w in self.relators)

    def __len__(self) -> int:
        return len(self.relators)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.relators)

    def __contains__(self, word: object) -> bool:
        return isinstance(word, Word) and str(word) in self._texts

    def audit(self) -> List[str]:
        """Lists every way the set fails to be symmetrized; empty when it is."""
        problems = []
        lengths = {len(w) for w in self.relators}
        if len(lengths) > 1:
            problems.append(f"relators have different lengths {sorted(lengths)}")
        for w in self.relators:
            if not w.is_cyclically_reduced():
                problems.append(f"{w} is not cyclically reduced")
            if w.inverse() not in self:
                problems.append(f"inverse of {w} is missing")
            if w.rotate(1) not in self:
                problems.append(f"rotation of {w} is missing")
        return problems


def symmetrize(u: Word) -> SymmetrizedSet:
    if not len(u) or not u.is_cyclically_reduced():
        raise DomainError(f"Symmetrization needs a nonempty cyclically reduced word, got {u!r}")
    inverse = u.inverse()
    return SymmetrizedSet([u.rotate(i) for i in range(len(u))] + [inverse.rotate(i) for i in range(len(u))])


def _common_prefix_length(x: str, y: str) -> int:
    length = 0
    for a, b in zip(x, y):
        if a != b:
            break
        length += 1
    return length


def _comparison_pool(relators: Iterable[Word], w: Word) -> List[str]:
    pool = {str(x) for x in relators}
    pool.update(str(w.rotate(j)) for j in range(len(w)))
    return sorted(pool)


def max_piece_prefix(relators: Iterable[Word], w: Word, i: int) -> int:
    """
    Length of the longest prefix of w rotated to start at i that is a piece.

    The prefix is compared with every other element of relators and with
    every other cyclic permutation of w.
    """
    if not 0 <= i < len(w):
        raise DomainError(f"Position {i} is outside a word of length {len(w)}")
    target = str(w.rotate(i))
    return max((_common_prefix_length(target, other) for other in _comparison_pool(relators, w) if other != target), default=0)


def piece_profile(relators: Iterable[Word], w: Word) -> List[int]:
    """max_piece_prefix at every position of w, using sorted neighbours of each rotation."""
    pool = _comparison_pool(relators, w)
    index = {text: position for position, text in enumerate(pool)}
    profile = []
    for i in range(len(w)):
        position = index[str(w.rotate(i))]
        target = pool[position]
        best = 0
        if position > 0:
            best = _common_prefix_length(target, pool[position - 1])
        if position + 1 < len(pool):
            best = max(best, _common_prefix_length(target, pool[position + 1]))
        profile.append(best)
    return profile


def min_pieces_from(profile: Sequence[int], start: int) -> Optional[int]:
    """
    Fewest pieces whose product is the rotation of the word beginning at start.

    Pieces are closed under prefixes, so the positions reachable with j pieces
    form an initial segment and the exact minimum is found layer by layer.
    Returns None if the rotation is not a product of pieces at all.
    """
    n = len(profile)
    pieces, reached, j = 0, 0, 0
    while reached < n:
        farthest = reached
        while j <= reached:
            farthest = max(farthest, j + min(profile[(start + j) % n], n - j))
            j += 1
        if farthest == reached:
            return None
        pieces += 1
        reached = farthest
    return pieces


def piece_statistics(relators: Iterable[Word]) -> Tuple[int, Optional[int]]:
    """
    (longest piece, fewest pieces forming an element) over a collection of relators.

    The second value is None when no element is a product of pieces.
    """
    relators = list(relators)
    texts = {str(w) for w in relators}
    classes: Dict[Word, Word] = {}
    for w in relators:
        classes.setdefault(CyclicWord(w).canonical, w)
    longest, fewest = 0, None
    for w in classes.values():
        profile = piece_profile(relators, w)
        longest = max(longest, max(profile, default=0))
        for start in range(len(w)):
            if str(w.rotate(start)) not in texts:
                continue
            count = min_pieces_from(profile, start)
            if count is not None and (fewest is None or count < fewest):
                fewest = count
    return longest, fewest


def cancellation_matrix(relators: Sequence[Word]) -> np.ndarray:
    """
    Boolean matrix whose (i, j) entry says the last letter of relator i cancels
    the first letter of relator j, with j the inverse of i excluded.
    """
    words = list(relators)
    first = np.array([w[0] for w in words], dtype=np.int64)
    last = np.array([w[-1] for w in words], dtype=np.int64)
    adjacency = last[:, None] == -first[None, :]
    position = {w: i for i, w in enumerate(words)}
    for i, w in enumerate(words):
        inverse = position.get(w.inverse())
        if inverse is not None:
            adjacency[i, inverse] = False
    return adjacency


def satisfies_t4(relators: Sequence[Word]) -> bool:
    """T(4) holds iff the cancellation matrix has no directed triangle."""
    if not len(relators):
        return True
    adjacency = cancellation_matrix(relators).astype(np.int64)
    return int(np.trace(adjacency @ adjacency @ adjacency)) == 0


def _require_open_unit(r: ExtendedRational) -> None:
    if r.is_infinite or not (0 < r < 1):
        raise DomainError(f"Small cancellation is checked for 0 < r < 1, got {r}")


@dataclass(frozen=True)
class PieceStatistics:
    r: ExtendedRational
    max_piece_length: int
    min_pieces_per_relator: Optional[int]
    c4: bool
    t4: bool


@lru_cache(maxsize=1024)
def piece_report(r: ExtendedRational) -> PieceStatistics:
    _require_open_unit(r)
    symmetrized = symmetrize(relator(r))
    longest, fewest = piece_statistics(symmetrized)
    report = PieceStatistics(
        r=r,
        max_piece_length=longest,
        min_pieces_per_relator=fewest,
        c4=fewest is None or fewest >= 4,
        t4=satisfies_t4(symmetrized.relators),
    )
    logging.debug(f"Small cancellation for {r}: {report}")
    return report


def check_c4(r: ExtendedRational) -> PieceStatistics:
    return piece_report(r)


def check_t4(r: ExtendedRational) -> PieceStatistics:
    return piece_report(r)
