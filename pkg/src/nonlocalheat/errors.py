"""Exception types shared across the package."""


class NonlocalHeatError(Exception):
    """Base class for all package errors."""


class ConfigurationError(NonlocalHeatError, ValueError):
    """Invalid grid, potential, schedule, or run configuration."""


class DimensionError(NonlocalHeatError, ValueError):
    """Field shape does not conform to the grid it is used with."""


class DomainError(NonlocalHeatError, ValueError):
    """Evaluation requested outside the admissible argument domain."""


class PreconditionError(NonlocalHeatError, ValueError):
    """A solver precondition (e.g. nonnegative coefficient) is violated."""


class SolverError(NonlocalHeatError, RuntimeError):
    """Linear or nonlinear solver failed to converge.

    Carries the last relative residual when available.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class OracleFailure(NonlocalHeatError, RuntimeError):
    """The all-at-once reference solver failed from every built-in start."""


class StudyError(NonlocalHeatError, RuntimeError):
    """A refinement study could not complete (named level did not converge)."""
