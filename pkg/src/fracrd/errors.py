"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class PrecisionError(ArithmeticError):
    """The requested accuracy could not be reached.

    Carries the last residual estimate in ``residual``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ResolutionError(ValueError):
    """A spectral request exceeds what the quadrature grid can represent."""


class StepSizeError(ValueError):
    """An explicit step violates its stability estimate.

    ``suggested_dt`` is a step size predicted to be stable.
    """

    def __init__(self, message, suggested_dt=None):
        super().__init__(message)
        self.suggested_dt = suggested_dt


class StiffnessError(ArithmeticError):
    """An implicit scalar solve failed to converge."""
