class OreltError(Exception):
    """Base class for all errors raised by orelt."""


class MalformedInputError(OreltError, ValueError):
    pass


class DomainError(OreltError, ValueError):
    """Input is well formed but outside the domain of the operation."""


class ResourceError(OreltError):
    """A configured search or enumeration cap would be exceeded."""

    def __init__(self, message, cap=None, value=None):
        super().__init__(message)
        self.cap = cap
        self.value = value


class StructuralError(OreltError, ValueError):
    pass


class CertificateError(OreltError):
    """A Tietze move precondition failed during replay."""

    def __init__(self, message, move_index=None):
        if move_index is not None:
            message = f"move {move_index}: {message}"
        super().__init__(message)
        self.move_index = move_index


class ParseError(OreltError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
