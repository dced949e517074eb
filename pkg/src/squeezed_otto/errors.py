"""Exception hierarchy shared by all modules."""


class OttoError(Exception):
    """Base class for library errors."""


class ValidationError(OttoError, ValueError):
    """Invalid input parameters. ``field`` names the offending input when known."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class RangeError(OttoError, ValueError):
    """Argument outside the domain where the quantity is defined."""


class OutOfRegimeError(RangeError):
    """Engine is not extracting work at the requested operating point."""


class NotFoundError(OttoError, LookupError):
    """Search target not reachable within the configured bounds."""


class NonConvergenceError(OttoError, RuntimeError):
    """Step doubling hit the cap before the tolerance was met."""

    def __init__(self, message, estimates=()):
        super().__init__(message)
        self.estimates = tuple(estimates)


class ConsistencyError(OttoError, RuntimeError):
    """An internal invariant failed (non-physical state, complex energy)."""
