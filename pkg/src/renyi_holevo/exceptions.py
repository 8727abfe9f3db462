class ValidationError(ValueError):
    """Input object violates a structural invariant (shape, Hermiticity, trace...)."""


class DomainError(ValueError):
    """Operation undefined for the given operand, e.g. a power of a non-PSD matrix."""


class ParameterError(ValueError):
    """Scalar parameter outside the range the operation accepts."""


class OutsideValidityWarning(UserWarning):
    """Result computed outside the setting in which the bound is known to hold."""
