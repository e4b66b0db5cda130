"""
Errors raised while reading, writing and generating graphs.
"""
from apps.gain_graphs.exceptions import RefrigError


class GraphParseError(RefrigError, ValueError):
    """A graph or directions file is malformed; line is 1-based."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class GenerationFailedError(RefrigError):
    """Randomized generation did not produce a family member within its bound."""
