"""Exceptions shared across the package."""


class ParseError(ValueError):
    """Raised when a scalar, polynomial or matrix text form cannot be parsed."""


class CapExceededError(RuntimeError):
    """Raised when an enumeration would exceed its configured size cap.

    Exceeding a cap is always an error, never a silent approximation: every
    identity checked by this package is exact or not checked at all.
    """
