"""Exception types shared across the package."""


class SchemeForgeError(Exception):
    """Base class for all package errors."""


class UsageError(SchemeForgeError):
    """Bad arguments or incompatible objects (caller error)."""


class ConfigError(UsageError):
    """Malformed or inconsistent configuration."""


class ResourceLimitError(SchemeForgeError):
    """A configured size bound was exceeded."""


class IntegrityError(SchemeForgeError):
    """An internal consistency check failed (the construction's
    hypotheses did not hold, e.g. representative-dependent
    intersection counts)."""
