"""Exception hierarchy shared by every module of the package."""


class MleinError(Exception):
    """Base class for all errors raised by :mod:`mlein`."""


class DomainError(MleinError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class PoleError(DomainError):
    """The gamma function has a pole at the requested argument."""


class SectorError(DomainError):
    """``arg z`` lies outside the sector where an expansion is valid."""


class DegenerateParameterError(DomainError):
    """Parameters sit on a degenerate boundary the chosen branch cannot handle."""


class UnsupportedRegimeError(DomainError):
    """The parameter regime is not covered (e.g. ``alpha > 2``)."""


class ConvergenceError(MleinError, ArithmeticError):
    """A series did not reach its stopping criterion within the term budget."""


class PrecisionError(ConvergenceError):
    """Cancellation exceeds the digits available at the working precision."""


class ExponentOverflowError(MleinError, OverflowError):
    """An exponential factor exceeds the double precision range."""
