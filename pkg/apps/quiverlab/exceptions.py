"""Exceptions raised by the quiverlab library.

Malformed user input (algebra specs, selectors, flags) is reported with Django's
``ValidationError``, the same way form and model validators report it. Everything
below is raised by a computation that was given well-formed input.

Each class carries the process exit code used when a management command fails
with it.

"""


class QuiverLabError(Exception):
    """Base class for computational failures."""
    returncode = 2


class BoundsExceeded(QuiverLabError):
    """A budget, a cap or an enumeration bound was too small for the request."""
    returncode = 2


class CatalogMiss(BoundsExceeded):
    """A module has an indecomposable summand missing from the catalog.

    This means the catalog was enumerated with a dimension bound that is too
    small for the module at hand.

    """


class AmbiguousResult(QuiverLabError):
    """A randomized decision found no witness after the allotted trials."""
    returncode = 2


class PreconditionError(QuiverLabError):
    """An operation was called on input that violates its precondition."""
    returncode = 3


class CacheError(QuiverLabError):
    """A catalog cache file exists but cannot be read back."""
    returncode = 3
