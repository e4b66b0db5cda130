"""
Randomized generation of family members.
"""
import logging
from random import Random
from typing import List, Tuple

from apps.corpus.exceptions import GenerationFailedError
from apps.gain_graphs.graph import ColoredGraph
from apps.sparsity.services.counts import Family, connected_subgraph_check, is_member
from config.runconfig import RunConfig

logger = logging.getLogger(__name__)


def candidate_edges(n: int) -> List[Tuple[int, int, int]]:
    """Every non-loop pair with either gain, and a gain-1 loop per vertex."""
    candidates = [(i, j, gain) for i in range(n) for j in range(i + 1, n) for gain in (0, 1)]
    candidates.extend((i, i, 1) for i in range(n))
    return candidates


def generate(n: int, family: Family, config: RunConfig = None, rng: Random = None) -> ColoredGraph:
    """
    Random member of a family on n vertices.

    Candidate edges are offered in random order and kept while the counts
    still pass, until the family's edge count is reached. Restarts up to
    retry_cap times.

    Raises:
        ValueError: if n < 1
        GenerationFailedError: if no restart produces a member
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    config = config or RunConfig()
    rng = rng or config.rng()
    target = family.target_edges(n)
    if target is None:
        target = n
    for restart in range(1, config.retry_cap + 1):
        candidates = candidate_edges(n)
        rng.shuffle(candidates)
        edges: List[Tuple[int, int, int]] = []
        for candidate in candidates:
            if len(edges) == target:
                break
            trial = ColoredGraph.from_triples(n, edges + [candidate])
            if connected_subgraph_check(trial, family).passed:
                edges.append(candidate)
        g = ColoredGraph.from_triples(n, edges)
        if is_member(g, family):
            logger.debug("generated %s member on %d vertices (restart %d)", family.value, n, restart)
            return g
    raise GenerationFailedError(
        f"no {family.value} graph on {n} vertices after {config.retry_cap} restarts"
    )
