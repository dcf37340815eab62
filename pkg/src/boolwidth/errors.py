"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed graph or decomposition input; carries a 1-based line number."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class ScaleLimitError(RuntimeError):
    """An exponential routine was asked to run beyond its guarded size."""


class PathDecompositionError(ValueError):
    """Invalid path decomposition; names the violated rule."""

    def __init__(self, rule, message):
        super().__init__(f"{rule}: {message}")
        self.rule = rule


class TimeLimitExceeded(RuntimeError):
    """Raised internally when a CLI deadline passes between work items."""
