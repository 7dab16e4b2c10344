"""Exception hierarchy. CLI exit codes hang off these classes."""


class CycloScanError(Exception):
    """Base class for all library errors."""


class InvalidPrimeError(CycloScanError, ValueError):
    pass


class ZeroInverseError(CycloScanError, ZeroDivisionError):
    pass


class NonUnitError(CycloScanError, ValueError):
    """Series with a non-invertible constant term."""


class RangeError(CycloScanError, ValueError):
    pass


class InconsistencyError(CycloScanError):
    """An internal invariant failed; points at a bug, not at bad input."""


class PolicyError(CycloScanError, ValueError):
    pass


class ElementBudgetError(CycloScanError, MemoryError):
    pass
