"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`LrwError`.
The class names double as the error names printed by the command line tool.
"""

from __future__ import annotations


class LrwError(Exception):
    """Base class for domain errors."""


# field
class NotPrime(LrwError):
    pass


class ReduciblePoly(LrwError):
    pass


class NotInvolution(LrwError):
    pass


class NotSesqui(LrwError):
    pass


class UndefinedQuotient(NotSesqui):
    """sigma(1) = 0, so x -> sigma(x)/sigma(1) does not exist."""


# matrix / graph
class ZeroT(LrwError):
    pass


class NotSquare(LrwError):
    pass


class DimensionMismatch(LrwError):
    pass


class UnknownVertex(LrwError):
    pass


class NonEdgePivot(LrwError):
    pass


class FieldNotBinary(LrwError):
    pass


class VertexClash(LrwError):
    pass


class NotSigmaSymmetric(LrwError):
    pass


class SizeLimitExceeded(LrwError):
    pass


# width
class BadPermutation(LrwError):
    pass


class EncodingMismatch(LrwError):
    pass


# minors
class Truncated(LrwError):
    """An orbit hit its member limit before the answer was certain."""

    def __init__(self, message: str, partial: bool = False) -> None:
        super().__init__(message)
        self.partial = partial


# matroid
class NotABasis(LrwError):
    pass


class OverlappingSets(LrwError):
    pass


class UnknownElement(LrwError):
    pass


# profiles
class IntractableExhaustive(LrwError):
    pass


class IndexOutOfRange(LrwError):
    pass


class ProfileInvariantError(LrwError):
    pass


class FormatError(LrwError):
    """Malformed input file."""
