"""
Sparsity counts for colored graphs.

Every family bounds the edge count m' of each edge-induced subgraph by a
function of n' (spanned vertices), c' (components with non-trivial rho-image)
and c'_0 (components with trivial rho-image), and fixes a global edge count.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence

from apps.gain_graphs.graph import (
    ColoredGraph,
    EdgeSubset,
    SubsetCounts,
    classify_components,
    edge_subset,
    subset_counts,
)

logger = logging.getLogger(__name__)


class Family(str, Enum):
    REFLECTION_LAMAN = 'reflection-laman'
    ROSS = 'ross'
    REFLECTION_22 = 'reflection-22'
    REFLECTION_11 = 'reflection-11'
    PLAIN_21 = 'plain-21'
    PLAIN_22 = 'plain-22'
    LAMAN_23 = 'laman-23'

    def bound(self, counts: SubsetCounts) -> int:
        """Largest edge count the family allows on a subgraph with these counts."""
        n, _, c, c0 = counts
        if self is Family.REFLECTION_LAMAN:
            return 2 * n - c - 3 * c0
        if self is Family.ROSS:
            return 2 * n - 2 * c - 3 * c0
        if self is Family.REFLECTION_22:
            return 2 * n - c - 2 * c0
        if self is Family.REFLECTION_11:
            return n - c0
        if self is Family.PLAIN_21:
            return 2 * n - 1
        if self is Family.PLAIN_22:
            return 2 * n - 2
        return 2 * n - 3

    def target_edges(self, n: int) -> Optional[int]:
        """Global edge count of a member on n vertices (None for reflection-11)."""
        if self in (Family.REFLECTION_LAMAN, Family.REFLECTION_22, Family.PLAIN_21):
            return 2 * n - 1
        if self in (Family.ROSS, Family.PLAIN_22):
            return 2 * n - 2
        if self is Family.LAMAN_23:
            return 2 * n - 3 if n > 1 else 0
        return None

    @classmethod
    def from_name(cls, name: str) -> 'Family':
        """Accept 'reflection-laman', 'REFLECTION_LAMAN' or 'ReflectionLaman'."""
        wanted = name.strip().lower().replace('_', '').replace('-', '')
        for family in cls:
            if wanted in (family.value.replace('-', ''), family.name.lower().replace('_', '')):
                return family
        choices = ', '.join(f.value for f in cls)
        raise ValueError(f"unknown family {name!r}; choose one of {choices}")


@dataclass(frozen=True)
class CountReport:
    """
    Outcome of a count check.

    When the check fails, witness is a violating edge subset, minimal by
    inclusion, and counts/bound are recomputed for it.
    """
    family: Family
    passed: bool
    witness: Optional[EdgeSubset] = None
    counts: Optional[SubsetCounts] = None
    bound: Optional[int] = None

    @property
    def deficiency(self) -> int:
        if self.passed:
            return 0
        return self.counts.edges - self.bound

    def as_dict(self) -> Dict:
        data = {'family': self.family.value, 'verdict': 'pass' if self.passed else 'fail'}
        if not self.passed:
            data['witness'] = list(self.witness)
            data['counts'] = dict(self.counts._asdict(), bound=self.bound)
        return data


def violates(g: ColoredGraph, family: Family, indices: Sequence[int]) -> bool:
    counts = subset_counts(g, indices)
    return counts.edges > family.bound(counts)


def _failure(g: ColoredGraph, family: Family, indices: Sequence[int]) -> CountReport:
    witness = edge_subset(indices)
    counts = subset_counts(g, witness)
    return CountReport(family, False, witness, counts, family.bound(counts))


def check_counts(g: ColoredGraph, family: Family) -> CountReport:
    """
    Literal count check over every non-empty edge subset.

    Subsets are visited by increasing size, so the first violation found is
    minimal by inclusion. Exponential in m; use it as the oracle.
    """
    for size in range(1, g.m + 1):
        for indices in combinations(range(g.m), size):
            if violates(g, family, indices):
                return _failure(g, family, indices)
    return CountReport(family, True)


def edge_adjacency(g: ColoredGraph) -> List[List[int]]:
    """Edges sharing an endpoint, per edge (the line graph of the multigraph)."""
    by_vertex: Dict[int, List[int]] = {}
    for i, e in enumerate(g.edges):
        by_vertex.setdefault(e.tail, []).append(i)
        if e.head != e.tail:
            by_vertex.setdefault(e.head, []).append(i)
    adjacency = []
    for i, e in enumerate(g.edges):
        neighbours = set(by_vertex[e.tail]) | set(by_vertex[e.head])
        neighbours.discard(i)
        adjacency.append(sorted(neighbours))
    return adjacency


def connected_edge_sets(g: ColoredGraph) -> Iterator[EdgeSubset]:
    """
    Yield every connected edge subset exactly once.

    ESU enumeration on the edge adjacency: sets are grown from their
    smallest edge, and only edges in the exclusive neighbourhood of the
    newest edge are added to the extension.
    """
    adjacency = edge_adjacency(g)

    def extend(subset, extension, covered, root):
        yield edge_subset(subset)
        extension = list(extension)
        while extension:
            w = extension.pop(0)
            exclusive = [u for u in adjacency[w] if u > root and u not in covered]
            grown = sorted(set(extension) | set(exclusive))
            yield from extend(subset + [w], grown, covered | set(exclusive), root)

    for root in range(g.m):
        first = [u for u in adjacency[root] if u > root]
        yield from extend([root], first, {root} | set(adjacency[root]), root)


def minimize_witness(g: ColoredGraph, family: Family, indices: Sequence[int]) -> EdgeSubset:
    """
    Smallest violating connected subset of a violating edge set, ties broken
    lexicographically.

    A proper violating subset would contain a smaller connected violator, so
    the result is minimal by inclusion.
    """
    indices = edge_subset(indices)
    sub = g.restrict(indices)
    best = None
    for subset in connected_edge_sets(sub):
        if violates(sub, family, subset) and (best is None or (len(subset), subset) < (len(best), best)):
            best = subset
    if best is None:
        raise ValueError(f"edges {list(indices)} do not violate {family.value}")
    return edge_subset(indices[k] for k in best)


def connected_subgraph_check(g: ColoredGraph, family: Family) -> CountReport:
    """
    Count check restricted to connected edge subsets.

    Every family bound is superadditive over components, so a violation
    exists iff a connected one does. Agrees with check_counts on the verdict;
    the witness may differ.
    """
    for subset in connected_edge_sets(g):
        if violates(g, family, subset):
            witness = minimize_witness(g, family, subset)
            logger.debug("%s violated by %s (found %s)", family.value, witness, subset)
            return _failure(g, family, witness)
    return CountReport(family, True)


def _reflection11_global(g: ColoredGraph) -> bool:
    # Every component, isolated vertices included, is a map-graph component
    # with non-trivial rho-image.
    components = classify_components(g, g.all_edges())
    spanned = set().union(*(c.vertices for c in components)) if components else set()
    if len(spanned) != g.n:
        return False
    for component in components:
        edges = sum(1 for e in g.edges if e.tail in component.vertices)
        if component.rho_trivial or edges != len(component.vertices):
            return False
    return True


def global_condition(g: ColoredGraph, family: Family) -> bool:
    if family is Family.REFLECTION_11:
        return _reflection11_global(g)
    return g.m == family.target_edges(g.n)


def is_member(g: ColoredGraph, family: Family, exhaustive: bool = False) -> bool:
    """
    Count check plus the family's global condition.

    exhaustive=True runs the literal all-subsets check instead of the
    connected search.
    """
    if not global_condition(g, family):
        return False
    check = check_counts if exhaustive else connected_subgraph_check
    return check(g, family).passed


def is_ross_circuit(g: ColoredGraph) -> bool:
    if g.m != 2 * g.n - 1:
        return False
    return all(is_member(g.without_edge(i), Family.ROSS) for i in range(g.m))


def has_trivial_22_block(g: ColoredGraph) -> bool:
    """Whether some connected rho-trivial subgraph has m' = 2n' - 2."""
    for subset in connected_edge_sets(g):
        counts = subset_counts(g, subset)
        if counts.odd_components == 0 and counts.edges == 2 * counts.vertices - 2:
            return True
    return False
