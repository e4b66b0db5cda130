"""
Errors raised by the rigidity services.
"""
from apps.gain_graphs.exceptions import RefrigError


class CollapsedEdgeError(RefrigError, ValueError):
    """An edge has coincident lifted endpoints, so it carries no direction."""

    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} is collapsed: Phi(gamma) p_head == p_tail")


class InternalDisagreementError(RefrigError):
    """The combinatorial and the numeric verdicts differ."""

    def __init__(self, report):
        self.report = report
        super().__init__(
            f"combinatorial verdict {report.combinatorial_verdict} "
            f"!= numeric verdict {report.numeric_verdict}"
        )
