"""
Errors raised by the direction-network services.
"""
from apps.gain_graphs.exceptions import RefrigError


class ZeroDirectionError(RefrigError, ValueError):
    """A direction assignment contains the zero vector."""

    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} has the zero direction")


class RetriesExhaustedError(RefrigError):
    """A verification-guarded random construction failed every attempt."""

    def __init__(self, what, attempts):
        self.what = what
        self.attempts = attempts
        super().__init__(f"{what}: no verified result after {attempts} attempts (reseed)")
