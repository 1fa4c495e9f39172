"""Exception types raised across the package."""


class QuasiCapError(Exception):
    """Base class for all package errors."""


class DimensionError(QuasiCapError, ValueError):
    """Shapes or subsystem dimensions do not fit together."""


class ContractError(QuasiCapError, ValueError):
    """An input violates a documented precondition (e.g. not Hermitian)."""


class ParameterError(QuasiCapError, ValueError):
    """A scalar parameter lies outside its admissible range."""


class NormalizationError(QuasiCapError, ValueError):
    """A probability vector does not sum to one."""


class NoCrossingError(QuasiCapError, ValueError):
    """A bisection bracket has the same sign at both ends."""
