"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """No evaluation path reached the requested tolerance.

    ``residual`` carries the best achieved relative residual.
    """

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual


class AccelerationError(ConvergenceError):
    """Averaged partial sums of an oscillatory integral failed to contract."""


class DivergenceError(ValueError):
    """The integrand decays too slowly for the integral to exist."""


class NonFiniteIntegrandError(ValueError):
    """The integrand returned a non-finite value; ``abscissa`` records where."""

    def __init__(self, message: str, abscissa: float):
        super().__init__(message)
        self.abscissa = abscissa


class DecayConditionError(ValueError):
    """A coefficient sequence fails the admissibility (decay) condition."""


class LipschitzError(ValueError):
    """A profile function violates its declared Lipschitz bound or periodicity."""
