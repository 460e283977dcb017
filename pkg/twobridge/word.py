"""
Words in the free group F(a, b) and the relator u_r of the upper presentation.

Letters are stored as signed integers (a = 1, b = 2, inverses negated) and
printed in the compact form where lowercase is a generator and uppercase its
inverse, so "abAB" is a b a⁻¹ b⁻¹.
"""
from enum import IntEnum
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from .errors import DomainError, WordParseError
from .rational import ExtendedRational


class Generator(IntEnum):
    A = 1
    B = 2


_CHAR_TO_LETTER = {"a": 1, "A": -1, "b": 2, "B": -2}
_LETTER_TO_CHAR = {letter: char for char, letter in _CHAR_TO_LETTER.items()}
# a < A < b < B, used to pick canonical rotations.
_LETTER_RANK = {1: 0, -1: 1, 2: 2, -2: 3}


def generator_of(letter: int) -> Generator:
    return Generator(abs(letter))


def exponent_of(letter: int) -> int:
    return 1 if letter > 0 else -1


def least_rotation(sequence: Sequence) -> int:
    """
    Booth's algorithm: the start index of the lexicographically least rotation.

    Elements only need to be mutually comparable; the empty sequence gives 0.
    """
    n = len(sequence)
    if n == 0:
        return 0
    doubled = list(sequence) * 2
    failure = [-1] * len(doubled)
    k = 0
    for j in range(1, len(doubled)):
        current = doubled[j]
        i = failure[j - k - 1]
        while i != -1 and current != doubled[k + i + 1]:
            if current < doubled[k + i + 1]:
                k = j - i - 1
            i = failure[i]
        if current != doubled[k + i + 1]:
            if current < doubled[k]:
                k = j
            failure[j - k] = -1
        else:
            failure[j - k] = i + 1
    return k % n


def _reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for letter in letters:
        if letter not in _LETTER_TO_CHAR:
            raise WordParseError(f"Unknown letter {letter!r}; letters are ±1 (a) and ±2 (b)")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def _letters_from_text(text: str) -> List[int]:
    try:
        return [_CHAR_TO_LETTER[char] for char in text]
    except KeyError as e:
        raise WordParseError(f"Cannot parse word {text!r}: unexpected character {e.args[0]!r}") from e


class Word:
    """
    A freely reduced word over {a, b}.

    Construction always reduces, so Word("abBa") is the word "aa".
    """

    __slots__ = ("_letters",)

    def __init__(self, letters: Union[str, Iterable[int]] = ()):
        if isinstance(letters, str):
            letters = _letters_from_text(letters)
        self._letters = _reduce(letters)

    @property
    def letters(self) -> Tuple[int, ...]:
        return self._letters

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self._letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self._letters[index])
        return self._letters[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Word):
            return self._letters == other._letters
        if isinstance(other, str):
            return str(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self._letters + tuple(other))

    def inverse(self) -> "Word":
        return Word(-letter for letter in reversed(self._letters))

    __invert__ = inverse

    def rotate(self, start: int) -> "Word":
        """The cyclic permutation beginning at position start."""
        if not self._letters:
            return self
        start %= len(self._letters)
        return Word(self._letters[start:] + self._letters[:start])

    def is_cyclically_reduced(self) -> bool:
        return len(self._letters) < 2 or self._letters[0] != -self._letters[-1]

    def tokens(self) -> List[str]:
        """Signed generator tokens, e.g. ['a', 'b^-1'], for JSON output."""
        return [generator_of(x).name.lower() + ("" if x > 0 else "^-1") for x in self._letters]

    def __str__(self) -> str:
        return "".join(_LETTER_TO_CHAR[letter] for letter in self._letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def free_reduce(letters: Union[str, Iterable[int]]) -> Word:
    return Word(letters)


class CyclicWord:
    """
    A cyclically reduced word considered up to cyclic permutation.

    Equality and hashing go through the canonical rotation (least under
    a < A < b < B).  A cyclic word is not identified with its reverse or its
    inverse.
    """

    __slots__ = ("_representative", "_canonical")

    def __init__(self, word: Union[Word, str, Iterable[int]]):
        if not isinstance(word, Word):
            word = Word(word)
        letters = word.letters
        start, stop = 0, len(letters)
        while stop - start >= 2 and letters[start] == -letters[stop - 1]:
            start += 1
            stop -= 1
        self._representative = Word(letters[start:stop])
        self._canonical = None

    @property
    def representative(self) -> Word:
        return self._representative

    @property
    def canonical(self) -> Word:
        if self._canonical is None:
            ranks = [_LETTER_RANK[x] for x in self._representative]
            self._canonical = self._representative.rotate(least_rotation(ranks))
        return self._canonical

    def rotations(self) -> List[Word]:
        return [self._representative.rotate(i) for i in range(len(self._representative))]

    def inverse(self) -> "CyclicWord":
        return CyclicWord(self._representative.inverse())

    def __len__(self) -> int:
        return len(self._representative)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclicWord):
            return cyclically_equal(self, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __str__(self) -> str:
        return f"({self._representative})"

    def __repr__(self) -> str:
        return f"CyclicWord({str(self._representative)!r})"


def cyclic_reduce(word: Union[Word, str]) -> CyclicWord:
    return CyclicWord(word)


def cyclically_equal(w1: CyclicWord, w2: CyclicWord) -> bool:
    """True iff w2 is visually a cyclic shift of w1."""
    first, second = str(w1.representative), str(w2.representative)
    return len(first) == len(second) and second in first + first


def is_cyclically_alternating(w: Union[CyclicWord, Word]) -> bool:
    """
    True iff the generators a and b alternate all the way around the cycle.

    Raises:
        DomainError: For the empty word.
    """
    letters = w.representative.letters if isinstance(w, CyclicWord) else w.letters
    if not letters:
        raise DomainError("Alternation is only defined for nonempty words")
    n = len(letters)
    return all(abs(letters[i]) != abs(letters[(i + 1) % n]) for i in range(n))


def flip_b(w: Union[Word, CyclicWord]) -> Union[Word, CyclicWord]:
    """The automorphism (a, b) -> (a, b⁻¹); an involution."""
    if isinstance(w, CyclicWord):
        return CyclicWord(flip_b(w.representative))
    return Word(-letter if abs(letter) == Generator.B else letter for letter in w)


def _sign(exponent: int) -> int:
    return 1 if exponent % 2 == 0 else -1


def exponent_signs(r: ExtendedRational) -> List[int]:
    """ε_i = (-1)^⌊iq/p⌋ for i = 1, ..., p - 1."""
    q, p = r.numerator, r.denominator
    return [_sign(i * q // p) for i in range(1, p)]


def relator(r: ExtendedRational) -> Word:
    """
    The single relator u_{q/p} of the upper presentation <a, b | u_r>.

    u = a û b^((-1)^q) û⁻¹ when p is odd and u = a û a⁻¹ û⁻¹ when p is even,
    where û = b^ε1 a^ε2 b^ε3 ... has p - 1 alternating letters.

    Raises:
        DomainError: If r is ∞ or outside (0, 1].
    """
    if r.is_infinite or not (0 < r <= 1):
        raise DomainError(f"The upper presentation relator is defined for 0 < r <= 1, got {r}")
    q, p = r.numerator, r.denominator
    hat = [eps * (Generator.B if i % 2 == 1 else Generator.A) for i, eps in enumerate(exponent_signs(r), start=1)]
    hat_inverse = [-letter for letter in reversed(hat)]
    middle = _sign(q) * Generator.B if p % 2 == 1 else -Generator.A
    return Word([int(Generator.A)] + [int(x) for x in hat] + [int(middle)] + [int(x) for x in hat_inverse])


# The word of the zero slope; too short to contain half of any u_r with 0 < r < 1.
ZERO_SLOPE_WORD = Word("ab")
