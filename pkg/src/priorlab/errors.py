"""Exception types shared across the library."""


class PriorLabError(Exception):
    """Base class for all library errors."""


class DomainError(PriorLabError):
    """An argument lies outside the mathematical domain of an operation."""


class NotPositiveDefinite(PriorLabError):
    """A matrix required to be symmetric positive-definite is not."""


class NotConverged(PriorLabError):
    """An iterative fit exhausted its iteration budget."""


class Separation(PriorLabError):
    """Complete separation: the logistic MLE diverges."""


class DegenerateProposal(PriorLabError):
    """An MCMC proposal covariance failed its Cholesky factorization."""


class UnsimulablePrior(PriorLabError):
    """The requested prior is improper and cannot be sampled from."""


class TooFewDraws(PriorLabError):
    """A summary was requested from fewer draws than it needs."""


class EmptyGrid(PriorLabError):
    """A density evaluation grid is empty."""


class LengthMismatch(PriorLabError):
    """Two vectors that must be conformable are not."""


class ParseError(PriorLabError):
    """A data file failed to parse.

    Carries the 1-based physical line number and column of the offending
    field so the CLI can point at it.
    """

    def __init__(self, line, column, reason):
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__(f"line {line}, column {column}: {reason}")


class SchemaError(PriorLabError):
    """A data file has the wrong header or layout."""


class EmptyData(PriorLabError):
    """A data file contains no usable rows."""


class ConfigError(PriorLabError):
    """Base class for run-configuration problems (CLI exit code 1)."""


class UnknownKey(ConfigError):
    """A configuration key or option value is not recognized."""


class MissingRequired(ConfigError):
    """A required configuration key is absent."""


class ConfigTypeError(ConfigError):
    """A configuration value could not be converted to its expected type."""
