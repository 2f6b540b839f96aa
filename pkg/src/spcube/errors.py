"""Shared exception types."""


class SizeGuardError(RuntimeError):
    """Raised when an exact search would exceed its desk-scale size guard.

    Exact answers are mandatory everywhere in this package, so oversized
    requests are refused outright instead of being approximated.
    """
