"""
Exact slopes and their continued fraction normal forms.

A slope is an extended rational number q/p (with the point at infinity stored
as 1/0).  Slopes in (0, 1] have a unique continued fraction expansion
[m1, ..., mk] with mk >= 2 unless k = 1; this module converts between the two
forms, orders the expansions, steps to the predecessor used by the inductive
recurrences and computes the boundary slopes r1, r2 of the intervals
I1 = [0, r1] and I2 = [r2, 1].
"""
import math
import operator
import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from .errors import DomainError, SlopeParseError

_SLOPE_PATTERN = re.compile(r"^([+-]?\d+)(?:\s*/\s*([+-]?\d+))?$")
_INFINITY_SPELLINGS = {"inf", "infinity", "∞", "oo"}

Number = Union["ExtendedRational", Fraction, int]


@total_ordering
class ExtendedRational:
    """
    An element of Q ∪ {∞} kept in lowest terms with a non-negative denominator.

    Finite values compare and combine exactly; ∞ is normalized to 1/0 and only
    takes part in Möbius images and Farey adjacency tests.
    """

    __slots__ = ("_numerator", "_denominator")

    def __init__(self, numerator: int, denominator: int = 1):
        numerator = operator.index(numerator)
        denominator = operator.index(denominator)
        if denominator == 0:
            if numerator == 0:
                raise DomainError("0/0 is not an extended rational number")
            numerator = 1
        else:
            if denominator < 0:
                numerator, denominator = -numerator, -denominator
            g = math.gcd(numerator, denominator)
            numerator //= g
            denominator //= g
        self._numerator = numerator
        self._denominator = denominator

    @classmethod
    def infinity(cls) -> "ExtendedRational":
        return cls(1, 0)

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int]) -> "ExtendedRational":
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @classmethod
    def parse(cls, text: str) -> "ExtendedRational":
        """
        Parses "q/p", a bare integer, "inf" or a continued fraction "[m1,...,mk]".

        Raises:
            SlopeParseError: If the text is not one of the accepted spellings.
        """
        cleaned = text.strip()
        if cleaned.lower() in _INFINITY_SPELLINGS:
            return cls.infinity()
        if cleaned.startswith("["):
            return ContinuedFraction.parse(cleaned).value
        match = _SLOPE_PATTERN.match(cleaned)
        if not match:
            raise SlopeParseError(f"Cannot parse slope {text!r}; expected 'q/p', 'inf' or '[m1,...,mk]'")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if numerator == 0 and denominator == 0:
            raise SlopeParseError(f"Cannot parse slope {text!r}: 0/0 is undefined")
        return cls(numerator, denominator)

    @property
    def numerator(self) -> int:
        return self._numerator

    @property
    def denominator(self) -> int:
        return self._denominator

    @property
    def is_infinite(self) -> bool:
        return self._denominator == 0

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise DomainError("∞ has no finite value")
        return Fraction(self._numerator, self._denominator)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExtendedRational):
            return self._numerator == other._numerator and self._denominator == other._denominator
        if isinstance(other, (int, Fraction)):
            return not self.is_infinite and self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other: Number) -> bool:
        return self.to_fraction() < _as_fraction(other)

    def __hash__(self) -> int:
        # Agrees with Fraction and int hashes so mixed-type equality stays consistent.
        if self.is_infinite:
            return hash(math.inf)
        return hash(Fraction(self._numerator, self._denominator))

    def __neg__(self) -> "ExtendedRational":
        if self.is_infinite:
            return self
        return ExtendedRational(-self._numerator, self._denominator)

    def __add__(self, other: Number) -> "ExtendedRational":
        return ExtendedRational.from_fraction(self.to_fraction() + _as_fraction(other))

    __radd__ = __add__

    def __sub__(self, other: Number) -> "ExtendedRational":
        return ExtendedRational.from_fraction(self.to_fraction() - _as_fraction(other))

    def __rsub__(self, other: Number) -> "ExtendedRational":
        return ExtendedRational.from_fraction(_as_fraction(other) - self.to_fraction())

    def __mul__(self, other: Number) -> "ExtendedRational":
        return ExtendedRational.from_fraction(self.to_fraction() * _as_fraction(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "ExtendedRational":
        divisor = _as_fraction(other)
        if divisor == 0:
            raise DomainError(f"Division of {self} by zero")
        return ExtendedRational.from_fraction(self.to_fraction() / divisor)

    def __rtruediv__(self, other: Number) -> "ExtendedRational":
        if self._numerator == 0:
            raise DomainError(f"Division of {other} by zero")
        return ExtendedRational.from_fraction(_as_fraction(other) / self.to_fraction())

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        return f"{self._numerator}/{self._denominator}"

    def __repr__(self) -> str:
        return f"ExtendedRational({self._numerator}, {self._denominator})"


def _as_fraction(value: Number) -> Fraction:
    if isinstance(value, ExtendedRational):
        return value.to_fraction()
    return Fraction(value)


def parse_slope(text: str) -> ExtendedRational:
    return ExtendedRational.parse(text)


class ContinuedFraction:
    """
    A normalized expansion [m1, ..., mk] of a slope in (0, 1].

    All terms are positive and the last one is at least 2 unless k = 1, so
    each slope in (0, 1] has exactly one expansion.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[int]):
        terms = tuple(operator.index(m) for m in terms)
        if not terms:
            raise DomainError("A continued fraction needs at least one term")
        if any(m < 1 for m in terms):
            raise DomainError(f"Continued fraction terms must be positive, got {list(terms)}")
        if len(terms) > 1 and terms[-1] < 2:
            raise DomainError(f"The last term of {list(terms)} must be at least 2")
        self._terms = terms

    @classmethod
    def normalized(cls, terms: Iterable[int]) -> "ContinuedFraction":
        """Builds the normal form, folding a trailing 1 into the previous term."""
        terms = [operator.index(m) for m in terms]
        while len(terms) > 1 and terms[-1] == 1:
            terms.pop()
            terms[-1] += 1
        return cls(terms)

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        cleaned = text.strip()
        if not (cleaned.startswith("[") and cleaned.endswith("]")):
            raise SlopeParseError(f"Cannot parse continued fraction {text!r}; expected '[m1,...,mk]'")
        body = cleaned[1:-1].strip()
        try:
            terms = [int(part) for part in body.split(",")] if body else []
        except ValueError as e:
            raise SlopeParseError(f"Cannot parse continued fraction {text!r}: {e}") from e
        if not terms or any(m < 1 for m in terms):
            raise SlopeParseError(f"Continued fraction {text!r} needs one or more positive terms")
        return cls.normalized(terms)

    @property
    def terms(self) -> Tuple[int, ...]:
        return self._terms

    @property
    def value(self) -> ExtendedRational:
        return cf_value(self)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self._terms)

    def __getitem__(self, index):
        return self._terms[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ContinuedFraction):
            return self._terms == other._terms
        if isinstance(other, (tuple, list)):
            return self._terms == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __str__(self) -> str:
        return "[" + ",".join(str(m) for m in self._terms) + "]"

    def __repr__(self) -> str:
        return f"ContinuedFraction({list(self._terms)})"


def evaluate_terms(terms: Sequence[int]) -> Fraction:
    """
    Evaluates 1/(t1 + 1/(t2 + ...)) exactly for any sequence of positive terms.

    The empty sequence evaluates to 0, which is what the k = 1 truncation in the
    interval endpoint formulas needs.
    """
    value = Fraction(0)
    for m in reversed(terms):
        value = 1 / (m + value)
    return value


def cf_expand(r: ExtendedRational) -> ContinuedFraction:
    """
    Expands a slope 0 < r <= 1 into its normalized continued fraction.

    Raises:
        DomainError: If r is ∞ or lies outside (0, 1].
    """
    if r.is_infinite or not (0 < r <= 1):
        raise DomainError(f"Continued fraction expansion needs 0 < r <= 1, got {r}")
    numerator, denominator = r.numerator, r.denominator
    terms: List[int] = []
    while numerator:
        quotient, remainder = divmod(denominator, numerator)
        terms.append(quotient)
        denominator, numerator = numerator, remainder
    return ContinuedFraction(terms)


def cf_value(cf: ContinuedFraction) -> ExtendedRational:
    return ExtendedRational.from_fraction(evaluate_terms(cf.terms))


def predecessor(cf: ContinuedFraction) -> ContinuedFraction:
    """
    Returns the predecessor r̃ of r = [m1, ..., mk] used by the inductive recurrences.

    r̃ = [m1 - 1, m2, ..., mk] when m1 >= 2, so that r = r̃ / (1 + r̃), and
    r̃ = [m2 + 1, m3, ..., mk] when m1 = 1, so that r = 1 - r̃.

    Raises:
        DomainError: For [1], the base of the recursion.
    """
    terms = cf.terms
    if terms == (1,):
        raise DomainError("[1] has no predecessor")
    if terms[0] >= 2:
        return ContinuedFraction((terms[0] - 1,) + terms[1:])
    return ContinuedFraction((terms[1] + 1,) + terms[2:])


def precedes(x: ContinuedFraction, y: ContinuedFraction) -> bool:
    """
    The well-ordering on expansions: shorter first, then lexicographic.

    Reflexive, so precedes(x, x) is True.
    """
    if len(x) != len(y):
        return len(x) < len(y)
    return x.terms <= y.terms


def interval_endpoints(cf: ContinuedFraction) -> Tuple[ExtendedRational, ExtendedRational]:
    """
    Computes r1 and r2 with I1 = [0, r1] and I2 = [r2, 1] for r = [m1, ..., mk] in (0, 1).

    Args:
        cf: The expansion of r; [1] is rejected.

    Returns:
        Tuple[ExtendedRational, ExtendedRational]: (r1, r2), both Farey neighbours of r.
    """
    terms = cf.terms
    if terms == (1,):
        raise DomainError("Interval endpoints are defined for 0 < r < 1 only")
    truncated = evaluate_terms(terms[:-1])
    lowered = evaluate_terms(terms[:-1] + (terms[-1] - 1,))
    if len(terms) % 2 == 1:
        r1, r2 = truncated, lowered
    else:
        r1, r2 = lowered, truncated
    return ExtendedRational.from_fraction(r1), ExtendedRational.from_fraction(r2)


def is_farey_neighbor(x: ExtendedRational, y: ExtendedRational) -> bool:
    return abs(x.numerator * y.denominator - x.denominator * y.numerator) == 1


def slopes_up_to(max_denominator: int) -> Iterator[ExtendedRational]:
    """Yields every q/p in (0, 1] with p <= max_denominator, by denominator then numerator."""
    for p in range(1, max_denominator + 1):
        for q in range(1, p + 1):
            if math.gcd(q, p) == 1:
                yield ExtendedRational(q, p)


def continued_fractions_up_to(max_denominator: int) -> Iterator[ContinuedFraction]:
    for slope in slopes_up_to(max_denominator):
        yield cf_expand(slope)
