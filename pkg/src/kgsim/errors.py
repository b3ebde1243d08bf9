"""Exception types shared across the package."""


class KgsimError(Exception):
    """Base class for errors raised by kgsim."""


class ConfigError(KgsimError):
    """A run configuration is missing, malformed, or inconsistent."""


class SchemaError(ConfigError):
    """A persisted file does not carry the expected schema header."""


class NumericsError(KgsimError):
    """A numeric sanity check failed (e.g. state norm drifted)."""
