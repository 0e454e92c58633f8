"""Shared exception types.

Domain errors (bad mathematical input) are plain ValueError.  The two
subclasses mark situations the command line maps to dedicated exit codes.
"""


class UnsupportedRegimeError(ValueError):
    """Raised for parameter regimes the theory deliberately excludes,
    e.g. ell = 2 without 4 | (q - eps)."""


class BoundExceededError(ValueError):
    """Raised when a request exceeds a documented size or policy bound."""
