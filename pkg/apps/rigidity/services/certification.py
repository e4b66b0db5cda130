"""
Certification of generic minimal rigidity.

The combinatorial side decides reflection-Laman membership; the numeric
side produces a rank certificate, at a faithful realization of a special
pair when the graph is a member and at sampled placements otherwise. The
two verdicts must agree.
"""
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Dict, Optional

from apps.directions.services.constructions import SpecialPair, special_pair
from apps.directions.services.network import classify
from apps.gain_graphs.graph import ColoredGraph, Placement
from apps.rigidity.exceptions import InternalDisagreementError
from apps.rigidity.services.framework import (
    is_minimally_rigid,
    rigidity_rank,
    sample_generic_rank,
)
from apps.sparsity.services.counts import (
    CountReport,
    Family,
    connected_subgraph_check,
    global_condition,
)
from config.runconfig import RunConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CertificationReport:
    n: int
    m: int
    combinatorial_verdict: bool
    counts: CountReport
    numeric_verdict: bool
    rank: int
    target: int
    minimal: bool
    placement: Placement
    special: Optional[SpecialPair]
    config: RunConfig

    @property
    def agreement(self) -> bool:
        return self.combinatorial_verdict == self.numeric_verdict

    def as_dict(self) -> Dict:
        combinatorial = {'verdict': self.combinatorial_verdict, 'family': Family.REFLECTION_LAMAN.value}
        if not self.counts.passed:
            combinatorial['witness'] = list(self.counts.witness)
            combinatorial['counts'] = dict(self.counts.counts._asdict(), bound=self.counts.bound)
        elif not self.combinatorial_verdict:
            combinatorial['reason'] = f"edge count {self.m} != {2 * self.n - 1}"
        special = None
        if self.special is not None:
            special = dict(
                self.special.as_dict(),
                realization=[[str(x), str(y)] for x, y in self.placement],
            )
        return {
            'graph': {'n': self.n, 'm': self.m},
            'combinatorial': combinatorial,
            'numeric': {
                'verdict': self.numeric_verdict,
                'rank': self.rank,
                'target': self.target,
                'minimal': self.minimal,
                'placement': [[str(x), str(y)] for x, y in self.placement],
            },
            'special_pair': special,
            'agreement': self.agreement,
            'config': self.config.as_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + '\n'


def certify(g: ColoredGraph, config: RunConfig = None, rng: Random = None) -> CertificationReport:
    """
    Run both sides and compare.

    Raises:
        InternalDisagreementError: if the verdicts differ (carries the report)
        RetriesExhaustedError: if the special-pair search gives up
    """
    config = config or RunConfig()
    rng = rng or config.rng()
    target = 2 * g.n - 1
    counts = connected_subgraph_check(g, Family.REFLECTION_LAMAN)
    combinatorial = counts.passed and global_condition(g, Family.REFLECTION_LAMAN)
    special = None

    if combinatorial:
        special = special_pair(g, config, rng)
        placement = classify(g, special.directions, config.witness_base).witness
        rank = rigidity_rank(g, placement)
        minimal = is_minimally_rigid(g, placement)
        logger.info("certificate rank %d of %d at a faithful realization", rank, target)
    else:
        sample = sample_generic_rank(g, config.generic_trials, config, rng)
        placement, rank = sample.placement, sample.rank
        minimal = is_minimally_rigid(g, placement)
        logger.info("generic rank %d of %d over %d samples", rank, target, config.generic_trials)
    numeric = g.m == target and rank == target and minimal

    report = CertificationReport(
        n=g.n,
        m=g.m,
        combinatorial_verdict=combinatorial,
        counts=counts,
        numeric_verdict=numeric,
        rank=rank,
        target=target,
        minimal=minimal,
        placement=tuple((Fraction(x), Fraction(y)) for x, y in placement),
        special=special,
        config=config,
    )
    if not report.agreement:
        logger.warning("combinatorial %s disagrees with numeric %s", combinatorial, numeric)
        raise InternalDisagreementError(report)
    return report
