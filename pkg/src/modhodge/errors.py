"""Exception hierarchy.

Every error raised for a broken mathematical invariant derives from
:class:`InvariantError`; the CLI maps those to exit code 1.
"""


class ModHodgeError(Exception):
    """Base class for all package errors."""


class InvariantError(ModHodgeError):
    """An exactness, integrality or consistency check failed."""


class IntegralityError(InvariantError):
    pass


class NonExactDivisionError(InvariantError):
    pass


class ConversionError(InvariantError):
    """A pure/round E -> P conversion produced a non-polynomial or negative result."""


class RouteDisagreementError(InvariantError):
    pass


class SeriesOrderError(ModHodgeError, ValueError):
    pass


class UnsupportedError(ModHodgeError, ValueError):
    """Parameters outside the supported range (bad family, rank, order...)."""
