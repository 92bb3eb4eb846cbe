"""Exception hierarchy shared across the package."""


class LedspdcError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LedspdcError, ValueError):
    """A value is outside its physical or mathematical domain."""


class InputError(LedspdcError, ValueError):
    """A measurement set is malformed (missing/duplicate settings, too few points)."""


class FitError(LedspdcError, RuntimeError):
    """An iterative fit failed to converge.

    Carries the last residual so callers can report how far off the fit was.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ConfigError(LedspdcError, ValueError):
    """A configuration document violates the schema.

    ``field_path`` points at the offending entry, e.g. ``pump.sigma0``.
    """

    def __init__(self, message, field_path=None):
        super().__init__(message)
        self.field_path = field_path
