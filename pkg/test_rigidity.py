"""
Tests for symmetric frameworks: lengths, rigidity matrices and ranks.
"""
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from apps.corpus.services.catalog import NAMED_GRAPHS, exhaustive_graphs
from apps.directions.services import linalg
from apps.directions.services.network import build_system, perp
from apps.gain_graphs.graph import ColoredGraph
from apps.rigidity.exceptions import CollapsedEdgeError
from apps.rigidity.services.framework import (
    directions_from_points,
    edge_lengths,
    generic_rank,
    is_infinitesimally_rigid,
    is_minimally_rigid,
    length_derivatives,
    random_placement,
    rigidity_matrix,
    rigidity_rank,
    sample_generic_rank,
    vertical_translation,
)
from config.runconfig import RunConfig
from graph_strategies import placements

G2_PLACEMENT = ((1, 2), (3, 5))


def graph_and_placement():
    names = sorted(NAMED_GRAPHS)
    return st.sampled_from(names).flatmap(
        lambda name: placements(NAMED_GRAPHS[name].n).map(lambda p: (NAMED_GRAPHS[name], p))
    )


def test_edge_lengths():
    assert edge_lengths(ColoredGraph.from_triples(1, [(0, 0, 1)]), [(1, 0)]) == (4,)
    assert edge_lengths(ColoredGraph.from_triples(2, [(0, 1, 0)]), [(0, 0), (1, 1)]) == (2,)
    assert edge_lengths(ColoredGraph.from_triples(2, [(0, 1, 1)]), [(1, 0), (2, 0)]) == (9,)


def test_loop_row(loop_graph):
    assert rigidity_matrix(loop_graph, [(1, 0)]) == [[4, 0]]
    certificate = is_infinitesimally_rigid(loop_graph, [(1, 0)])
    assert certificate.rigid
    assert certificate.rank == 1
    assert certificate.target == 1
    assert certificate.as_dict() == {
        'verdict': 'rigid',
        'rank': 1,
        'target': 1,
        'trivial_kernel_dim': 1,
        'placement': [['1', '0']],
    }


def test_loop_on_the_axis_is_flexible(loop_graph):
    assert rigidity_rank(loop_graph, [(0, 5)]) == 0
    assert not is_infinitesimally_rigid(loop_graph, [(0, 5)]).rigid


def test_identity_edge_row():
    g = ColoredGraph.from_triples(2, [(0, 1, 0)])
    assert rigidity_matrix(g, [(0, 0), (2, 3)]) == [[-2, -3, 2, 3]]


def test_reflected_edge_row_moves_the_head_with_its_mirror():
    g = ColoredGraph.from_triples(2, [(0, 1, 1)])
    # D = Phi p_b - p_a = (-3, 0); v_b enters as Phi v_b
    assert rigidity_matrix(g, [(1, 0), (2, 0)]) == [[3, 0, 3, 0]]


def test_g2_rows(g2):
    assert rigidity_matrix(g2, G2_PLACEMENT) == [
        [-2, -3, 2, 3],
        [4, -3, 4, 3],
        [4, 0, 0, 0],
    ]
    assert rigidity_rank(g2, G2_PLACEMENT) == 3
    assert is_minimally_rigid(g2, G2_PLACEMENT)


def test_overbraced_is_not_minimal():
    g = NAMED_GRAPHS['g2-overbraced']
    assert is_infinitesimally_rigid(g, G2_PLACEMENT).rigid
    assert not is_minimally_rigid(g, G2_PLACEMENT)


def test_generic_ranks(loop_graph, g_rc, k4, config):
    assert generic_rank(loop_graph, config=config) == 1
    assert generic_rank(g_rc, config=config) == 5
    assert generic_rank(k4, config=config) == 5


def test_sample_generic_rank_needs_a_trial(g_rc):
    with pytest.raises(ValueError):
        sample_generic_rank(g_rc, 0)


def test_sample_generic_rank_is_deterministic(g_rc_pendant):
    first = sample_generic_rank(g_rc_pendant, 3, RunConfig(seed=11))
    second = sample_generic_rank(g_rc_pendant, 3, RunConfig(seed=11))
    assert first == second


def test_directions_from_points(loop_graph):
    assert directions_from_points(loop_graph, [(1, 0)]) == ((-2, 0),)
    with pytest.raises(CollapsedEdgeError):
        directions_from_points(loop_graph, [(0, 5)])


@given(graph_and_placement())
@settings(max_examples=60, deadline=None)
def test_vertical_translation_is_a_motion(case):
    g, p = case
    translation = vertical_translation(g.n)
    assert all(linalg.dot(row, translation) == 0 for row in rigidity_matrix(g, p))


@given(graph_and_placement())
@settings(max_examples=60, deadline=None)
def test_rank_equals_rank_of_perpendicular_network(case):
    g, p = case
    try:
        d = directions_from_points(g, p)
    except CollapsedEdgeError:
        assume(False)
    assert rigidity_rank(g, p) == linalg.rank(build_system(g, perp(d)), 2 * g.n)


@given(graph_and_placement(), st.data())
@settings(max_examples=40, deadline=None)
def test_length_derivatives_match_the_matrix(case, data):
    g, p = case
    v = data.draw(st.lists(st.integers(-9, 9).map(Fraction), min_size=2 * g.n, max_size=2 * g.n))
    derivatives = length_derivatives(g, p, v)
    assert derivatives == tuple(2 * linalg.dot(row, v) for row in rigidity_matrix(g, p))


def test_kernel_motions_preserve_lengths(g_rc_pendant):
    p = ((3, 1), (-2, 4), (5, -1), (1, 7))
    for v in linalg.nullspace(rigidity_matrix(g_rc_pendant, p), 2 * g_rc_pendant.n):
        assert all(value == 0 for value in length_derivatives(g_rc_pendant, p, v))


@pytest.mark.slow
def test_rank_transfer_on_small_exhaustive_corpus():
    for n in range(1, 4):
        for g in exhaustive_graphs(n):
            for seed in range(3):
                p = random_placement(g.n, RunConfig(seed=seed).rng(), RunConfig(seed=seed))
                try:
                    d = directions_from_points(g, p)
                except CollapsedEdgeError:
                    continue
                rows = rigidity_matrix(g, p)
                perp_rows = build_system(g, perp(d))
                assert rows == [[-value for value in row] for row in perp_rows], (g.triples(), seed)
                assert rigidity_rank(g, p) == linalg.rank(perp_rows, 2 * g.n), (g.triples(), seed)
