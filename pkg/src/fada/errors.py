"""Exception types shared across the package."""


class FadaError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(FadaError):
    """Malformed root data, formal group law descriptor, or CLI input."""


class PrecisionError(FadaError):
    """A truncated-series computation cannot be certified at the requested degree."""


class WindowExceededError(FadaError):
    """A computation needs coefficients outside the available length window.

    The message states the window that would be required, so callers can
    rebuild their tables instead of silently truncating.
    """


class MembershipError(FadaError):
    """An element expected to lie in a subring (or span) does not."""


class UnsupportedTheoryError(FadaError):
    """An operation is only meaningful for the one-parameter connective family."""


class NotApplicableError(FadaError):
    """A check is vacuous for the given input (e.g. infinite braid order)."""
