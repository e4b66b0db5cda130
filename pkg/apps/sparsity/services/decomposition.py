"""
Constructive decompositions of reflection-(2,2) and reflection-Laman graphs.

* spanning tree + reflection-(1,1) split, with the tree switched to gain 0
* Ross-basis extraction and Ross-circuit location
* contraction of Ross-circuits into the reduced graph
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, NamedTuple, Tuple

import networkx as nx

from apps.gain_graphs.exceptions import NotASpanningTreeError
from apps.gain_graphs.graph import (
    Color,
    ColoredGraph,
    Edge,
    EdgeSubset,
    classify_components,
    edge_subset,
    lift,
    recolor_tree_identity,
    switching,
)
from apps.sparsity.exceptions import (
    NoDecompositionError,
    NotReflection22Error,
    NotReflectionLamanError,
)
from apps.sparsity.services.counts import (
    Family,
    connected_subgraph_check,
    is_member,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeMapDecomposition:
    """
    Spanning tree plus reflection-(1,1) complement.

    recolored is the input switched by the tree potential, so every tree edge
    has gain 0 there; switching holds that potential per vertex.
    """
    graph: ColoredGraph
    tree: EdgeSubset
    map_part: EdgeSubset
    recolored: ColoredGraph
    switching: Tuple[int, ...]

    def as_dict(self) -> Dict:
        return {
            'tree': list(self.tree),
            'map_part': list(self.map_part),
            'recolored_gains': [int(e.gain) for e in self.recolored.edges],
            'switching': list(self.switching),
        }


class MapComponent(NamedTuple):
    edges: EdgeSubset
    cycle: EdgeSubset


@dataclass(frozen=True)
class CircuitDecomposition:
    """
    Ross-circuits of a reflection-Laman graph and the reduced graph.

    contraction_map[v] is the reduced-graph vertex of original vertex v.
    """
    basis: EdgeSubset
    circuits: Tuple[EdgeSubset, ...]
    reduced: ColoredGraph
    contraction_map: Tuple[int, ...]

    def as_dict(self) -> Dict:
        return {
            'basis': list(self.basis),
            'circuits': [list(c) for c in self.circuits],
            'reduced': {'n': self.reduced.n, 'edges': self.reduced.triples()},
            'contraction_map': list(self.contraction_map),
        }


def find_tree_map_split(g: ColoredGraph) -> TreeMapDecomposition:
    """
    First spanning tree, in lexicographic order of edge indices, whose
    complement is a reflection-(1,1) graph.

    Raises:
        NoDecompositionError: if no tree works.
    """
    candidates = [i for i, e in enumerate(g.edges) if not e.is_loop]
    tried = 0
    for tree in combinations(candidates, max(g.n - 1, 0)):
        try:
            potential = switching(g, tree)
        except NotASpanningTreeError:
            continue
        tried += 1
        chosen = set(tree)
        complement = tuple(i for i in range(g.m) if i not in chosen)
        if is_member(g.restrict(complement), Family.REFLECTION_11):
            logger.debug("tree %s accepted after %d spanning trees", tree, tried)
            return TreeMapDecomposition(
                graph=g,
                tree=edge_subset(tree),
                map_part=complement,
                recolored=recolor_tree_identity(g, tree),
                switching=potential,
            )
    raise NoDecompositionError(f"no spanning tree of {tried} leaves a reflection-(1,1) complement")


def decompose_tree_ref11(g: ColoredGraph) -> TreeMapDecomposition:
    """
    Split a reflection-(2,2) graph into a spanning tree and a reflection-(1,1) graph.

    Args:
        g: a reflection-(2,2) graph

    Returns:
        TreeMapDecomposition with the tree switched to gain 0

    Raises:
        NotReflection22Error: if g is not reflection-(2,2)
        NoDecompositionError: if the search fails on a member (a bug)
    """
    if not is_member(g, Family.REFLECTION_22):
        raise NotReflection22Error()
    try:
        return find_tree_map_split(g)
    except NoDecompositionError:
        logger.error("reflection-(2,2) graph %s has no tree/map split", g.triples())
        raise


def lift_structure_check(d: TreeMapDecomposition) -> bool:
    """
    Tree edges lift to two copies (i_0 j_0 and i_1 j_1) and every map-graph
    component lifts to a connected subgraph.
    """
    recolored = d.recolored
    if any(recolored.edges[i].gain != Color.IDENTITY for i in d.tree):
        return False
    lifted = lift(recolored)
    for component in map_components(recolored, d.map_part):
        if not nx.is_connected(lifted.to_networkx(component.edges)):
            return False
    return True


def _unique_cycle(g: ColoredGraph, edges: EdgeSubset) -> EdgeSubset:
    """Edges of the one cycle of a connected unicyclic edge set."""
    cycle = nx.find_cycle(g.to_networkx(edges, all_vertices=False))
    return edge_subset(key for _, _, key in cycle)


def map_components(g: ColoredGraph, map_part: EdgeSubset) -> List[MapComponent]:
    """
    Components of a map-graph with the edges of their unique cycle, ordered
    by smallest edge index.
    """
    result = []
    for component in classify_components(g, map_part):
        edges = edge_subset(i for i in map_part if g.edges[i].tail in component.vertices)
        result.append(MapComponent(edges, _unique_cycle(g, edges)))
    result.sort(key=lambda c: c.edges[0])
    return result


def is_ross_sparse(g: ColoredGraph, indices) -> bool:
    return connected_subgraph_check(g.restrict(indices), Family.ROSS).passed


def ross_basis(g: ColoredGraph) -> EdgeSubset:
    """Greedy maximal Ross-sparse edge set in edge order."""
    basis: List[int] = []
    for i in range(g.m):
        if is_ross_sparse(g, basis + [i]):
            basis.append(i)
    return edge_subset(basis)


def fundamental_circuit(g: ColoredGraph, basis: EdgeSubset, extra: int) -> EdgeSubset:
    """The minimal non-Ross-sparse subset of basis + extra; it contains extra."""
    circuit = sorted(set(basis) | {extra})
    for f in list(circuit):
        if f == extra:
            continue
        trial = [i for i in circuit if i != f]
        if not is_ross_sparse(g, trial):
            circuit = trial
    return edge_subset(circuit)


def contract_circuits(g: ColoredGraph, circuits) -> Tuple[ColoredGraph, Tuple[int, ...]]:
    """
    Contract each circuit to a vertex carrying a new gain-1 loop.

    Circuits that already are a single vertex with a loop are left alone.
    Edges inside a contracted circuit are dropped; all other edges keep
    their order and gain. New vertex ids follow first appearance in the
    original vertex order.
    """
    group_of: Dict[int, int] = {}
    contracted = []
    for k, circuit in enumerate(circuits):
        vertices = g.vertices_of(circuit)
        if len(vertices) == 1 and len(circuit) == 1:
            continue
        contracted.append(k)
        for v in vertices:
            group_of[v] = k

    new_id: Dict[object, int] = {}
    mapping = []
    for v in range(g.n):
        key = ('circuit', group_of[v]) if v in group_of else ('vertex', v)
        if key not in new_id:
            new_id[key] = len(new_id)
        mapping.append(new_id[key])

    edges = []
    for e in g.edges:
        inside = e.tail in group_of and e.head in group_of and group_of[e.tail] == group_of[e.head]
        if not inside:
            edges.append(Edge(mapping[e.tail], mapping[e.head], e.gain))
    for k in contracted:
        vertex = new_id[('circuit', k)]
        edges.append(Edge(vertex, vertex, Color.REFLECTION))
    return ColoredGraph(len(new_id), tuple(edges)), tuple(mapping)


def find_ross_circuits(g: ColoredGraph) -> CircuitDecomposition:
    """
    Ross-circuits of a reflection-Laman graph and its reduced graph.

    Each edge outside the greedy Ross-basis closes exactly one circuit with
    the basis; duplicates are dropped, first occurrence kept.

    Raises:
        NotReflectionLamanError: if g is not reflection-Laman
    """
    if not is_member(g, Family.REFLECTION_LAMAN):
        raise NotReflectionLamanError()
    basis = ross_basis(g)
    circuits: List[EdgeSubset] = []
    for extra in range(g.m):
        if extra in basis:
            continue
        circuit = fundamental_circuit(g, basis, extra)
        if circuit not in circuits:
            circuits.append(circuit)
    reduced, mapping = contract_circuits(g, circuits)
    logger.debug("basis %s, circuits %s, reduced %s", basis, circuits, reduced.triples())
    return CircuitDecomposition(basis, tuple(circuits), reduced, mapping)
