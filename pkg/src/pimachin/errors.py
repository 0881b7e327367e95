"""Exception hierarchy shared by every module.

The CLI maps these onto process exit codes, so new error types should
subclass one of the three top branches below rather than Exception.
"""


class NumericsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(NumericsError):
    """An argument is outside the supported domain of an operation."""


class DivisionByZeroError(DomainError):
    """Division by an exactly-zero value."""


class PoleError(DomainError):
    """Evaluation at a pole of the expression (e.g. v = 1)."""


class SingularMeasureError(DomainError):
    """Lehmer measure of a term with |B| = 1 (log10 vanishes)."""


class PrecisionExhaustedError(DomainError):
    """The working precision cannot resolve the requested quantity."""


class DivergenceError(DomainError):
    """An iteration left its basin of convergence."""


class FloorIdentityError(DomainError):
    """The arctangent floor identity requires z outside [0, 1)."""


class MalformedFormulaError(NumericsError):
    """A formula document is structurally invalid (empty, zero argument...)."""


class InternalInconsistencyError(NumericsError):
    """Two computation paths that must agree exactly do not."""


class ReferenceInconsistencyError(InternalInconsistencyError):
    """The two independent pi reference evaluations disagree."""
