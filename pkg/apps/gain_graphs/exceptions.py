"""
Exceptions shared by every refrig app.
"""


class RefrigError(Exception):
    """Base class for all domain errors."""


class InvalidGraphError(RefrigError, ValueError):
    """An edge refers to a vertex outside the graph, or a gain is not 0/1."""


class NotACycleError(RefrigError, ValueError):
    """An edge subset handed to rho is not a closed walk."""


class NotASpanningTreeError(RefrigError, ValueError):
    """An edge subset is not a spanning tree of the graph."""
