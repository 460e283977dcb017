"""
Exception hierarchy shared by the two-bridge toolkit and its command line front end.
"""


class TwoBridgeError(Exception):
    """Base class for every error raised by the toolkit."""


class SlopeParseError(TwoBridgeError, ValueError):
    """A slope or continued fraction could not be parsed from text."""


class DomainError(TwoBridgeError, ValueError):
    """An argument is well formed but outside the domain of the operation."""


class ReductionError(TwoBridgeError, RuntimeError):
    """The orbit reduction ran out of fuel before reaching a canonical slope."""


class DecompositionError(TwoBridgeError, RuntimeError):
    """A constructed decomposition failed its check against the cyclic S-sequence."""


class WordParseError(TwoBridgeError, ValueError):
    """A compact word string used a character outside 'a', 'A', 'b', 'B'."""
