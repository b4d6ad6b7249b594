"""Exception hierarchy shared across the package."""


class DigraphSeqError(Exception):
    """Base class for all errors raised by :mod:`digraphseq`."""


class SizeLimitError(DigraphSeqError, ValueError):
    """Vertex count exceeds the configured or enumeration limit."""


class NotSortedError(DigraphSeqError, ValueError):
    """A sequence is not in the order an operation requires."""


class NotThresholdError(DigraphSeqError, ValueError):
    pass


class NoArcError(DigraphSeqError, ValueError):
    pass


class CompleteDigraphError(DigraphSeqError, ValueError):
    pass


class NotDigraphicalError(DigraphSeqError, ValueError):
    """Raised by the realizer; ``verdict`` holds the failed :class:`FcVerdict`."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"sequence is not digraphical: {verdict}")


class ParseError(DigraphSeqError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
