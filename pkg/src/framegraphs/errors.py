"""Exception types shared by all modules."""


class FramesError(Exception):
    """Base class for every error raised by the package."""


class DomainError(FramesError, ValueError):
    """An operation was called outside its domain (e.g. disconnected input)."""


class VertexRangeError(DomainError, IndexError):
    pass


class ParseError(FramesError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SubdivisionError(DomainError):
    pass


class NotApplicable(DomainError):
    """A geometric gadget cannot be applied to the given representation."""


class BudgetExceeded(FramesError):
    """A bounded search ran out of nodes.

    ``bounds`` carries whatever partial information the search established,
    e.g. ``(lower, upper)`` for the chromatic number.
    """

    def __init__(self, message: str, bounds=None):
        self.bounds = bounds
        super().__init__(message)


class CertificateError(FramesError, ValueError):
    def __init__(self, message: str, node: str | None = None):
        self.node = node
        if node is not None:
            message = f"{node}: {message}"
        super().__init__(message)
