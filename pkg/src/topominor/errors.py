"""Exception types shared by every module."""


class TopoMinorError(Exception):
    """Base class for all library errors."""


class ArgumentError(TopoMinorError, ValueError):
    """An argument violates an operation's precondition."""


class UnsupportedError(ArgumentError):
    """The presentation uses a constructor the operation does not handle."""


class ResourceError(TopoMinorError, RuntimeError):
    """A configured size bound would be exceeded."""


class ParseError(TopoMinorError, ValueError):
    """Malformed DSL text. ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=1, column=1, span=None):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column
        self.span = span
