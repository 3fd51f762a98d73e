"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class BaxtabError(Exception):
    """Base class for all errors raised by baxtab."""


class InvalidPartition(BaxtabError, ValueError):
    pass


class IllegalMove(BaxtabError, ValueError):
    """A step between consecutive shapes is not an allowed move."""


class BadPairing(BaxtabError, ValueError):
    """Hesitating moves cannot be grouped into the three legal pair types."""


class NotFromEmpty(BaxtabError, ValueError):
    pass


class GuardExceeded(BaxtabError):
    """An exhaustive search was asked to run past its size guard."""


class StartOutsideChamber(BaxtabError, ValueError):
    pass


class DimensionMismatch(BaxtabError, ValueError):
    pass


class NegativeResult(BaxtabError, ArithmeticError):
    """A signed reflection sum came out negative, which means a bug."""


class InvalidDiagram(BaxtabError, ValueError):
    pass


class HeightExceedsK(BaxtabError, ValueError):
    pass


class PatternViolation(BaxtabError, ValueError):
    """A diagram contains a pattern that its avoidance class forbids."""


class InternalCorner(BaxtabError, AssertionError):
    pass


class NotRowFinal(BaxtabError, ValueError):
    pass


class NonIntegerStep(BaxtabError, ArithmeticError):
    pass


class NonIntegralCoefficient(BaxtabError, ArithmeticError):
    pass


class OrderUnderflow(BaxtabError, ValueError):
    pass


class FlavorMismatch(BaxtabError, TypeError):
    pass


class NoPowerSeriesRoot(BaxtabError, ArithmeticError):
    pass


class BranchAmbiguous(BaxtabError, ArithmeticError):
    pass


class SupportOverflow(BaxtabError, ValueError):
    pass


class GroupClosureOverflow(BaxtabError, RuntimeError):
    pass
