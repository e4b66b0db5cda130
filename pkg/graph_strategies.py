"""
Hypothesis strategies for small colored graphs and placements.
"""
from fractions import Fraction

from hypothesis import strategies as st

from apps.gain_graphs.graph import ColoredGraph

gains = st.integers(min_value=0, max_value=1)


@st.composite
def colored_graphs(draw, max_n=4, max_m=7):
    """Any colored graph (loops and parallel edges included)."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    vertex = st.integers(min_value=0, max_value=n - 1)
    triples = draw(st.lists(st.tuples(vertex, vertex, gains), max_size=max_m))
    return ColoredGraph.from_triples(n, triples)


@st.composite
def connected_graphs_with_tree(draw, max_n=4, max_extra=4):
    """
    A connected colored graph whose first n - 1 edges form a spanning tree.

    Returns (graph, tree).
    """
    n = draw(st.integers(min_value=1, max_value=max_n))
    triples = []
    for v in range(1, n):
        parent = draw(st.integers(min_value=0, max_value=v - 1))
        triples.append((parent, v, draw(gains)))
    vertex = st.integers(min_value=0, max_value=n - 1)
    triples += draw(st.lists(st.tuples(vertex, vertex, gains), max_size=max_extra))
    return ColoredGraph.from_triples(n, triples), tuple(range(n - 1))


coordinates = st.integers(min_value=-50, max_value=50).map(Fraction)


def placements(n):
    return st.lists(st.tuples(coordinates, coordinates), min_size=n, max_size=n).map(tuple)


def directions(m):
    nonzero = st.tuples(coordinates, coordinates).filter(lambda d: d != (0, 0))
    return st.lists(nonzero, min_size=m, max_size=m).map(tuple)
