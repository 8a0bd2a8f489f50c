"""Exception types shared across the package."""


class FactorkitError(Exception):
    """Base class for all library-specific errors."""


class ScaleExceededError(FactorkitError):
    """An operation refused an input beyond its exhaustive-search cap.

    Subset-enumerating operations are exact and therefore exponential;
    each declares a hard input bound and raises this instead of running
    unbounded.
    """


class FormatError(FactorkitError):
    """A text or JSON input does not conform to the documented format."""


class VacuousInstanceError(FactorkitError):
    """Raised by the all-factors criterion when no admissible degree
    function exists (g = f with odd total).  The enumeration semantics
    is vacuously true there, but the criterion's inequality is not
    defined for such instances, so they are refused rather than
    answered inconsistently."""


class HypothesisError(FactorkitError):
    """An input violates a stated hypothesis of the operation, e.g. the
    reduction pipeline requires a connected cubic graph."""
