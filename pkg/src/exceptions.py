"""Error hierarchy for the rumor dynamics package.

Every error carries the process exit code the CLI maps it to.
"""


class RumorModelError(Exception):
    """Base class for all package errors."""

    exit_code: int = 2


class InvalidParamsError(RumorModelError, ValueError):
    """Model rates or simulation options are invalid."""


class InvalidStateError(RumorModelError, ValueError):
    """A state vector contains non-finite entries."""


class DomainError(RumorModelError, ValueError):
    """A state lies outside the simplex, the triangle Omega or [0, 1]."""


class ScenarioError(RumorModelError, ValueError):
    """A scenario file or command-line selection is malformed."""


class SingularityError(RumorModelError, ValueError):
    """A logarithmic first integral was evaluated at I <= 0."""


class EvaluationError(RumorModelError, ArithmeticError):
    """A candidate function returned a non-finite value at a sample point."""

    def __init__(self, message: str, point=None):
        super().__init__(message)
        self.point = point


class UnstableStartError(RumorModelError):
    """The initial state is an equilibrium on the repulsive side of the threshold."""

    exit_code = 3


class NoRootError(RumorModelError, ArithmeticError):
    """Bracketing failed to find a sign change for the final-size equation."""

    exit_code = 3


class IntegrationBlowupError(RumorModelError, ArithmeticError):
    """A Runge-Kutta stage produced non-finite values."""

    exit_code = 4


class ParameterRangeWarning(UserWarning):
    """A rate documented as a probability exceeds 1."""


class RenormalizationWarning(UserWarning):
    """Initial data did not sum to 1 and was rescaled onto the simplex."""
