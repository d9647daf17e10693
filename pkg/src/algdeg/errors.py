"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the supported mathematical domain."""


class ParseError(ValueError):
    """Textual input could not be parsed into a vector."""


class FormatError(ValueError):
    """A binary input file does not match the expected layout."""


class ConsistencyError(RuntimeError):
    """Two algorithms that must agree produced different results."""
