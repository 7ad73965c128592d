"""Exception types shared across the package.

The CLI maps these onto stable exit codes, so library code should raise
one of them (or OSError for filesystem trouble) rather than bare
ValueError when the condition is user-facing.
"""


class ConfigError(ValueError):
    """A configuration value or config file key is invalid."""


class DomainError(ValueError):
    """An argument is outside the operation's documented domain."""


class InputError(ValueError):
    """Structurally invalid input, e.g. a feature-width mismatch."""


class CsvParseError(ValueError):
    """A CSV file could not be parsed; the message names the line."""


class UnknownModelError(ValueError):
    """Requested model kind is not one of the supported regressors."""
