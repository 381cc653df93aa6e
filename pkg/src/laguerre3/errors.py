"""Exception hierarchy.

Every domain failure derives from :class:`LaguerreError`, which the CLI maps
to exit code 2.
"""


class LaguerreError(ValueError):
    """Base class for domain errors."""


class NotAUnit(LaguerreError, ZeroDivisionError):
    """Inverting an element of the maximal ideal."""


class NotAdmissible(LaguerreError):
    """A pair over L where neither entry is a unit."""


class SingularMatrix(LaguerreError, ZeroDivisionError):
    pass


class NotMutuallyDistant(LaguerreError):
    pass


class InvalidCoefficients(LaguerreError):
    pass


class InternalInconsistency(LaguerreError):
    """A computation that should be impossible; indicates a bug."""


class BothZero(LaguerreError):
    pass


class NotFlagPreserving(LaguerreError):
    pass


class NotATypeMatrix(LaguerreError):
    pass


class WrongType(LaguerreError):
    pass


class NoSolution(LaguerreError):
    pass


class DegenerateSelection(LaguerreError):
    pass


class AtInfinity(LaguerreError):
    pass


class ZeroDirection(LaguerreError):
    pass


class NotACubic(LaguerreError):
    pass


class NotParabolas(LaguerreError):
    pass


class NotCubics(LaguerreError):
    pass


class ZeroA(LaguerreError):
    pass


class KindMismatch(LaguerreError):
    pass


class InvalidSpec(LaguerreError):
    pass
