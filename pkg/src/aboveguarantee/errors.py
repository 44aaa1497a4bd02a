"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid graph, formula, or parameter supplied by the caller."""


class ParseError(InputError):
    """Malformed input text. ``line`` is 1-based, or None if not line-specific."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(RuntimeError):
    """A configured size or work guard was exceeded."""
