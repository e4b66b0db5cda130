"""
Z/2Z-colored multigraphs, their symmetric double covers and the map rho.

A ColoredGraph is the quotient (G, gamma) of a reflection-symmetric graph.
Vertices are the integers 0..n-1 and edges are identified by their position
in the edge list, so parallel edges stay distinguishable and every search in
the project breaks ties by edge order.
"""
import logging
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

import networkx as nx

from apps.gain_graphs.exceptions import (
    InvalidGraphError,
    NotACycleError,
    NotASpanningTreeError,
)

logger = logging.getLogger(__name__)

# Index list over a graph's edge list, kept sorted.
EdgeSubset = Tuple[int, ...]
Point = Tuple[Fraction, Fraction]
Placement = Tuple[Point, ...]


class Color(IntEnum):
    """Element of Z/2Z; 1 is the reflection through the y-axis."""
    IDENTITY = 0
    REFLECTION = 1

    def __xor__(self, other):
        return Color(int(self) ^ int(other))

    __add__ = __xor__
    __rxor__ = __xor__


def color_sum(colors: Iterable[int]) -> Color:
    return reduce(lambda acc, c: acc ^ Color(c), colors, Color.IDENTITY)


def phi(gain: int, point: Sequence) -> Point:
    """Apply the reflection Phi(gain) to a 2-vector."""
    x, y = point
    if gain:
        return (-x, y)
    return (x, y)


class Edge(NamedTuple):
    tail: int
    head: int
    gain: Color

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def as_triple(self) -> Tuple[int, int, int]:
        return (self.tail, self.head, int(self.gain))


def edge_subset(indices: Iterable[int]) -> EdgeSubset:
    return tuple(sorted(set(indices)))


@dataclass(frozen=True)
class ColoredGraph:
    """
    Directed multigraph on vertices 0..n-1 with Z/2Z gains.

    Self-loops and parallel edges are allowed. Instances are immutable; every
    operation that changes the edge set returns a new graph.
    """
    n: int
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"vertex count must be non-negative, got {self.n}")
        normalized = []
        for index, edge in enumerate(self.edges):
            tail, head, gain = edge
            if isinstance(tail, bool) or isinstance(head, bool):
                raise InvalidGraphError(f"edge {index} has a boolean endpoint")
            if not (0 <= tail < self.n and 0 <= head < self.n):
                raise InvalidGraphError(
                    f"edge {index} ({tail}, {head}) has an endpoint outside 0..{self.n - 1}"
                )
            if isinstance(gain, bool) or gain not in (0, 1):
                raise InvalidGraphError(f"edge {index} has gain {gain}, expected 0 or 1")
            normalized.append(Edge(int(tail), int(head), Color(gain)))
        object.__setattr__(self, 'edges', tuple(normalized))

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[Sequence[int]]) -> 'ColoredGraph':
        return cls(n, tuple(Edge(*triple) for triple in triples))

    @property
    def m(self) -> int:
        return len(self.edges)

    def all_edges(self) -> EdgeSubset:
        return tuple(range(self.m))

    def triples(self) -> List[Tuple[int, int, int]]:
        return [edge.as_triple() for edge in self.edges]

    def restrict(self, indices: Iterable[int]) -> 'ColoredGraph':
        """Keep only the given edges (in edge order) on the same vertex set."""
        return ColoredGraph(self.n, tuple(self.edges[i] for i in edge_subset(indices)))

    def without_edge(self, index: int) -> 'ColoredGraph':
        return ColoredGraph(self.n, self.edges[:index] + self.edges[index + 1:])

    def with_edge(self, tail: int, head: int, gain: int) -> 'ColoredGraph':
        return ColoredGraph(self.n, self.edges + (Edge(tail, head, Color(gain)),))

    def with_gains(self, gains: Sequence[int]) -> 'ColoredGraph':
        return ColoredGraph(
            self.n,
            tuple(Edge(e.tail, e.head, Color(g)) for e, g in zip(self.edges, gains)),
        )

    def induced_by_edges(self, indices: Iterable[int]) -> Tuple['ColoredGraph', Tuple[int, ...]]:
        """
        The edge-induced subgraph as a graph of its own.

        Returns the relabeled graph and the original id of each of its
        vertices (in increasing order).
        """
        indices = edge_subset(indices)
        vertices = tuple(sorted(self.vertices_of(indices)))
        position = {v: k for k, v in enumerate(vertices)}
        sub = ColoredGraph(
            len(vertices),
            tuple(
                Edge(position[self.edges[i].tail], position[self.edges[i].head], self.edges[i].gain)
                for i in indices
            ),
        )
        return sub, vertices

    def vertices_of(self, indices: Iterable[int]) -> frozenset:
        spanned = set()
        for i in indices:
            spanned.add(self.edges[i].tail)
            spanned.add(self.edges[i].head)
        return frozenset(spanned)

    def incident_edges(self, vertex: int) -> List[int]:
        return [i for i, e in enumerate(self.edges) if vertex in (e.tail, e.head)]

    def to_networkx(self, indices: Iterable[int] = None, all_vertices: bool = True) -> nx.MultiGraph:
        """
        Underlying undirected multigraph; edge keys are edge indices.

        With all_vertices=False only the vertices spanned by the chosen edges
        are added, matching the edge-induced subgraph convention.
        """
        indices = self.all_edges() if indices is None else edge_subset(indices)
        graph = nx.MultiGraph()
        if all_vertices:
            graph.add_nodes_from(range(self.n))
        for i in indices:
            e = self.edges[i]
            graph.add_edge(e.tail, e.head, key=i, gain=int(e.gain))
        return graph

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return nx.is_connected(self.to_networkx())


class ParityUnionFind:
    """
    Union-find that also tracks the Z/2Z potential of each vertex.

    Every vertex carries the parity of its path to the root of its set. Adding
    an edge whose gain disagrees with the parities already recorded closes a
    cycle with rho = 1, and the component is marked odd.
    """

    def __init__(self, vertices: Iterable[int] = ()):
        self.parent: Dict[int, int] = {}
        self.parity: Dict[int, int] = {}
        self.size: Dict[int, int] = {}
        self.odd = set()
        for v in vertices:
            self.add(v)

    def add(self, v: int) -> None:
        if v not in self.parent:
            self.parent[v] = v
            self.parity[v] = 0
            self.size[v] = 1

    def find(self, v: int) -> Tuple[int, int]:
        """Return (root, parity of v relative to root), compressing the path."""
        self.add(v)
        path = []
        while self.parent[v] != v:
            path.append(v)
            v = self.parent[v]
        root = v
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parent[node] = root
        return root, acc

    def union(self, u: int, v: int, gain: int) -> bool:
        """
        Add the constraint potential(u) + potential(v) = gain.

        Returns True when two sets were merged, False when the edge closed a
        cycle (the component becomes odd if the cycle has rho = 1).
        """
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        link = pu ^ pv ^ int(gain)
        if ru == rv:
            if link:
                self.odd.add(ru)
            return False
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        self.parity[rv] = link
        self.size[ru] += self.size[rv]
        if rv in self.odd:
            self.odd.discard(rv)
            self.odd.add(ru)
        return True

    def is_odd(self, v: int) -> bool:
        return self.find(v)[0] in self.odd

    def roots(self) -> set:
        return {self.find(v)[0] for v in list(self.parent)}

    def components(self) -> List[Tuple[frozenset, bool]]:
        """(vertex set, rho_trivial) per set, ordered by smallest vertex."""
        members: Dict[int, set] = {}
        for v in list(self.parent):
            members.setdefault(self.find(v)[0], set()).add(v)
        result = [(frozenset(vs), root not in self.odd) for root, vs in members.items()]
        result.sort(key=lambda item: min(item[0]))
        return result


class SubsetCounts(NamedTuple):
    """n', m', c' (rho non-trivial components) and c'_0 (trivial ones)."""
    vertices: int
    edges: int
    odd_components: int
    even_components: int


def _union_edges(g: ColoredGraph, indices: Iterable[int]) -> ParityUnionFind:
    uf = ParityUnionFind()
    for i in indices:
        e = g.edges[i]
        uf.union(e.tail, e.head, e.gain)
    return uf


def subset_counts(g: ColoredGraph, indices: Iterable[int]) -> SubsetCounts:
    """Counts of the edge-induced subgraph on the given edges, recomputed every call."""
    indices = list(indices)
    uf = _union_edges(g, indices)
    roots = uf.roots()
    odd = len(roots & uf.odd)
    return SubsetCounts(len(uf.parent), len(indices), odd, len(roots) - odd)


class Component(NamedTuple):
    vertices: frozenset
    rho_trivial: bool


def classify_components(g: ColoredGraph, s: Iterable[int]) -> List[Component]:
    """
    Components of the subgraph spanned by s with their rho-status.

    A component is rho-trivial iff every cycle in it, loops included, has
    gain sum 0.
    """
    return [Component(vs, trivial) for vs, trivial in _union_edges(g, s).components()]


def rho(g: ColoredGraph, cycle: Iterable[int]) -> Color:
    """
    Sum of the gains on a cycle.

    The edges must support a single closed walk: non-empty, connected and
    every vertex of even degree (a loop adds 2).

    Raises:
        NotACycleError: otherwise.
    """
    cycle = edge_subset(cycle)
    if not cycle:
        raise NotACycleError("empty edge set is not a cycle")
    sub = g.to_networkx(cycle, all_vertices=False)
    odd = [v for v, degree in sub.degree() if degree % 2]
    if odd:
        raise NotACycleError(f"vertices {sorted(odd)} have odd degree in {list(cycle)}")
    if not nx.is_connected(sub):
        raise NotACycleError(f"edges {list(cycle)} do not form a single closed walk")
    return color_sum(g.edges[i].gain for i in cycle)


def switching(g: ColoredGraph, tree: Iterable[int]) -> Tuple[int, ...]:
    """
    Vertex potential of a spanning tree.

    s[0] = 0 and s[head] = s[tail] + gain along every tree edge. Switching the
    graph by s (gain' = gain + s[tail] + s[head]) leaves rho unchanged and
    zeroes the tree.

    Raises:
        NotASpanningTreeError: if tree is not a spanning tree of g.
    """
    tree = edge_subset(tree)
    if g.n == 0:
        if tree:
            raise NotASpanningTreeError("empty graph has no edges")
        return ()
    if len(tree) != g.n - 1:
        raise NotASpanningTreeError(f"{len(tree)} edges cannot span {g.n} vertices as a tree")
    uf = ParityUnionFind(range(g.n))
    for i in tree:
        e = g.edges[i]
        if e.is_loop or not uf.union(e.tail, e.head, e.gain):
            raise NotASpanningTreeError(f"edge {i} closes a cycle in {list(tree)}")
    if len(uf.roots()) != 1:
        raise NotASpanningTreeError(f"edges {list(tree)} do not connect all vertices")
    base = uf.find(0)[1]
    return tuple(uf.find(v)[1] ^ base for v in range(g.n))


def recolor_tree_identity(g: ColoredGraph, tree: Iterable[int]) -> ColoredGraph:
    """
    Equivalent coloring with gain 0 on every tree edge.

    Non-tree edges end up carrying the rho-image of their fundamental cycle.
    """
    s = switching(g, tree)
    return g.with_gains([e.gain ^ s[e.tail] ^ s[e.head] for e in g.edges])


def lifted_points(p: Sequence[Point]) -> Dict[Tuple[int, int], Point]:
    """The 2n points of the symmetric lift: i_0 -> p_i, i_1 -> Phi p_i."""
    points = {}
    for i, point in enumerate(p):
        points[(i, 0)] = tuple(point)
        points[(i, 1)] = phi(1, point)
    return points


class LiftedEdge(NamedTuple):
    tail: Tuple[int, int]
    head: Tuple[int, int]
    index: int


def swap(vertex: Tuple[int, int]) -> Tuple[int, int]:
    i, sheet = vertex
    return (i, sheet ^ 1)


@dataclass(frozen=True)
class LiftGraph:
    """
    The double cover of a colored graph.

    Vertex i_g is the pair (i, g). Edge (i, j, gamma) lifts to (i_0, j_gamma)
    and (i_1, j_{gamma+1}); both lifted edges keep the quotient edge index.
    """
    n: int
    edges: Tuple[LiftedEdge, ...]

    @property
    def vertices(self) -> List[Tuple[int, int]]:
        return [(i, sheet) for i in range(self.n) for sheet in (0, 1)]

    def swap_edge(self, edge: LiftedEdge) -> LiftedEdge:
        return LiftedEdge(swap(edge.tail), swap(edge.head), edge.index)

    def swap_is_automorphism(self) -> bool:
        """The sheet swap maps the edge multiset onto itself and fixes no vertex."""
        def key(e):
            return (e.index, tuple(sorted([e.tail, e.head])))

        before = sorted(map(key, self.edges))
        after = sorted(key(self.swap_edge(e)) for e in self.edges)
        free = all(swap(v) != v for v in self.vertices)
        return free and before == after

    def quotient(self) -> ColoredGraph:
        by_index = {}
        for e in self.edges:
            if e.tail[1] == 0:
                by_index.setdefault(e.index, Edge(e.tail[0], e.head[0], Color(e.head[1])))
        return ColoredGraph(self.n, tuple(by_index[k] for k in sorted(by_index)))

    def to_networkx(self, indices: Iterable[int] = None) -> nx.MultiGraph:
        chosen = None if indices is None else set(indices)
        graph = nx.MultiGraph()
        for e in self.edges:
            if chosen is None or e.index in chosen:
                graph.add_edge(e.tail, e.head, index=e.index)
        return graph

    def is_connected(self) -> bool:
        graph = self.to_networkx()
        graph.add_nodes_from(self.vertices)
        return graph.number_of_nodes() > 0 and nx.is_connected(graph)


def lift(g: ColoredGraph) -> LiftGraph:
    lifted = []
    for index, e in enumerate(g.edges):
        lifted.append(LiftedEdge((e.tail, 0), (e.head, int(e.gain)), index))
        lifted.append(LiftedEdge((e.tail, 1), (e.head, int(e.gain) ^ 1), index))
    return LiftGraph(g.n, tuple(lifted))
