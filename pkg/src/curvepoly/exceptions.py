"""Exception types shared across the package."""


class ParameterDomainError(ValueError):
    """A family/weight parameter is outside its validity range."""


class ShapeError(ValueError):
    """Array argument has the wrong length or shape."""


class DegenerateCurveError(ValueError):
    """The leading cubic coefficient vanishes or the curve is degenerate."""


class InvalidChartError(ValueError):
    """The requested support window is incompatible with the curve."""


class DomainError(ValueError):
    """Evaluation requested outside the valid domain (e.g. phi(x) <= 0)."""


class PositivityError(ValueError):
    """A weight multiplier is not positive on the support interval."""


class NumericalError(RuntimeError):
    """A numerical procedure failed (non-convergence, non-finite samples)."""


class BranchLossError(NumericalError):
    """All candidate branches of an algebraic approximant became complex."""


class SolveError(NumericalError):
    """A collocation system was singular or too ill-conditioned to solve."""

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition
