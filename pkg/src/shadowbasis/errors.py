"""Exception types shared across the package."""


class SizeLimitError(ValueError):
    """An exhaustive computation would exceed its configured size cap."""

    def __init__(self, message: str, size: int, cap: int):
        super().__init__(message)
        self.size = size
        self.cap = cap


class InvalidInputError(ValueError):
    pass


class ParseError(ValueError):
    """One-line notation could not be parsed; ``column`` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column
