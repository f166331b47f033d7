"""Exception types raised across the package."""


class C4SpectraError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(C4SpectraError, ValueError):
    pass


class InvalidInputError(C4SpectraError, ValueError):
    pass


class PreconditionError(C4SpectraError, ValueError):
    pass


class CapacityError(C4SpectraError):
    """Requested size exceeds a configured ceiling."""


class ParseError(C4SpectraError, ValueError):
    pass


class InvalidShiftError(C4SpectraError, ValueError):
    def __init__(self, message, target=None):
        super().__init__(message)
        self.target = target


class EquitabilityError(C4SpectraError, ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NumericalError(C4SpectraError, ArithmeticError):
    pass


class ConvergenceError(NumericalError):
    """Iterative solver hit its cap; ``best`` holds the last iterate."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class NoRootError(NumericalError):
    pass


class IdentificationError(C4SpectraError):
    def __init__(self, message, values=None):
        super().__init__(message)
        self.values = values or {}
