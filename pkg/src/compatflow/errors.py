"""Exception types shared across the package."""


class CompatflowError(Exception):
    """Base class for errors raised by this package."""


class DomainError(CompatflowError, ValueError):
    """An argument lies outside the mathematical domain of an operation,
    e.g. an evaluation point with y outside [-1, 1] or beta = 0 where the
    construction divides by beta."""


class ConfigurationError(CompatflowError, ValueError):
    """Objects were combined inconsistently, e.g. fields on different grids
    or with different flow parameters, or a malformed problem description."""


class ValidationError(CompatflowError, ValueError):
    """A field failed admissibility checks. Carries the list of violated
    constraints as strings."""

    def __init__(self, violations):
        self.violations = list(violations)
        msg = "field failed admissibility checks:\n" + "\n".join(
            "  - " + v for v in self.violations
        )
        super().__init__(msg)


class NumericalError(CompatflowError, RuntimeError):
    """A numerical routine failed or produced an unusable result; the
    message carries condition/residual diagnostics."""
