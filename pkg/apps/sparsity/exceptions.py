"""
Errors raised by the sparsity and decomposition services.
"""
from apps.gain_graphs.exceptions import RefrigError


class FamilyPreconditionError(RefrigError, ValueError):
    """The input graph is not a member of the family an operation requires."""

    family_name = 'the required family'

    def __init__(self, message=None):
        super().__init__(message or f"graph is not in {self.family_name}")


class NotReflectionLamanError(FamilyPreconditionError):
    family_name = 'reflection-Laman'


class NotReflection22Error(FamilyPreconditionError):
    family_name = 'reflection-(2,2)'


class NotRossCircuitError(FamilyPreconditionError):
    family_name = 'Ross-circuit'


class NoDecompositionError(RefrigError):
    """No spanning tree leaves a reflection-(1,1) complement."""
