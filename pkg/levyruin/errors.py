""" errors.py

    Exception hierarchy. Every error carries the process exit code the CLI
    reports for it.
"""

from typing import Any, Optional

from .types import ExitCode


class LevyRuinError(Exception):
    exit_code: int = ExitCode.NUMERICAL_FAILURE


class ValidationFailed(LevyRuinError):
    exit_code = ExitCode.VALIDATION_FAILED


class MalformedInput(LevyRuinError, ValueError):
    exit_code = ExitCode.MALFORMED_INPUT


class UnsupportedParameters(LevyRuinError, ValueError):
    exit_code = ExitCode.UNSUPPORTED


class DomainError(UnsupportedParameters):
    """ Argument outside the set where the quantity is defined """


class NumericalFailure(LevyRuinError, ArithmeticError):
    exit_code = ExitCode.NUMERICAL_FAILURE


class QuadratureError(NumericalFailure):
    def __init__(self, message: str, partial: float = float('nan'), abserr: float = float('nan')):
        super().__init__(f'{message} (partial estimate {partial:.6g}, error estimate {abserr:.3g})')
        self.partial = partial
        self.abserr = abserr


class NonIntegrableTail(NumericalFailure):
    pass


class SingularResolventError(NumericalFailure):
    pass


class NormalizationBreakdown(NumericalFailure):
    pass


class MultiplicityError(NumericalFailure):
    pass


class ConstructionError(NumericalFailure):
    pass


class BudgetExceeded(NumericalFailure):
    def __init__(self, message: str, partial: Optional[Any] = None):
        super().__init__(message)
        self.partial = partial
