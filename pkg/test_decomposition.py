"""
Tests for the tree/map split, Ross-bases and Ross-circuit contraction.
"""
from itertools import combinations

import pytest

from apps.corpus.services.catalog import NAMED_GRAPHS, exhaustive_graphs
from apps.gain_graphs.graph import ColoredGraph
from apps.sparsity.exceptions import NoDecompositionError, NotReflection22Error, NotReflectionLamanError
from apps.sparsity.services.counts import Family, is_member, is_ross_circuit
from apps.sparsity.services.decomposition import (
    TreeMapDecomposition,
    contract_circuits,
    decompose_tree_ref11,
    find_ross_circuits,
    find_tree_map_split,
    is_ross_sparse,
    lift_structure_check,
    map_components,
    ross_basis,
)


def members(family, max_n=3):
    graphs = [g for n in range(1, max_n + 1) for g in exhaustive_graphs(n)]
    graphs += list(NAMED_GRAPHS.values())
    return [g for g in graphs if is_member(g, family)]


def test_decompose_g2(g2):
    d = decompose_tree_ref11(g2)
    assert d.tree == (0,)
    assert d.map_part == (1, 2)
    assert lift_structure_check(d)


def test_decompose_loop(loop_graph):
    d = decompose_tree_ref11(loop_graph)
    assert d.tree == ()
    assert d.map_part == (0,)
    assert d.switching == (0,)


def test_decompose_g_rc(g_rc):
    d = decompose_tree_ref11(g_rc)
    assert d.tree == (0, 3)
    assert d.map_part == (1, 2, 4)
    assert d.switching == (0, 0, 1)
    assert [int(e.gain) for e in d.recolored.edges] == [0, 1, 1, 0, 1]
    components = map_components(d.recolored, d.map_part)
    assert [tuple(c) for c in components] == [((1, 2, 4), (1, 2, 4))]


def test_decompose_requires_reflection_22(k4, ross_pair):
    with pytest.raises(NotReflection22Error):
        decompose_tree_ref11(k4)
    with pytest.raises(NotReflection22Error):
        decompose_tree_ref11(ross_pair)


def test_tree_map_split_without_a_split(k4):
    with pytest.raises(NoDecompositionError):
        find_tree_map_split(k4)


def test_lift_structure_check_rejects_uncolored_tree():
    g = ColoredGraph.from_triples(2, [(0, 1, 1), (0, 1, 0), (0, 0, 1)])
    broken = TreeMapDecomposition(graph=g, tree=(0,), map_part=(1, 2), recolored=g, switching=(0, 0))
    assert not lift_structure_check(broken)


def test_every_reflection_22_graph_decomposes():
    for g in members(Family.REFLECTION_22):
        d = decompose_tree_ref11(g)
        assert len(d.tree) == g.n - 1
        assert all(d.recolored.edges[i].gain == 0 for i in d.tree)
        assert is_member(g.restrict(d.map_part), Family.REFLECTION_11)
        assert lift_structure_check(d), g.triples()


def test_map_component_cycles_are_closed():
    g = ColoredGraph.from_triples(4, [(0, 1, 0), (1, 2, 0), (2, 0, 1), (2, 3, 0), (3, 3, 1)])
    components = map_components(g, (0, 1, 2))
    assert [tuple(c) for c in components] == [((0, 1, 2), (0, 1, 2))]
    pendant = ColoredGraph.from_triples(3, [(0, 0, 1), (0, 1, 0), (1, 2, 1)])
    assert [tuple(c) for c in map_components(pendant, (0, 1, 2))] == [((0, 1, 2), (0,))]


def test_map_component_cycles_skip_trees_hanging_off_them():
    # a path leading into a digon, next to a triangle with a pendant edge
    g = ColoredGraph.from_triples(8, [
        (0, 1, 0), (1, 2, 0), (2, 3, 0), (2, 3, 1),
        (4, 5, 0), (5, 6, 1), (6, 4, 0), (7, 5, 0),
    ])
    components = map_components(g, g.all_edges())
    assert [tuple(c) for c in components] == [((0, 1, 2, 3), (2, 3)), ((4, 5, 6, 7), (4, 5, 6))]


def test_ross_basis_examples(ross_pair, g_rc, k4):
    assert ross_basis(ross_pair) == (0, 1)
    assert ross_basis(g_rc) == (0, 1, 2, 3)
    assert ross_basis(k4) == (0, 1, 2, 3, 4)


def test_ross_basis_is_maximal():
    for g in members(Family.REFLECTION_LAMAN):
        basis = ross_basis(g)
        assert is_ross_sparse(g, basis)
        for extra in set(range(g.m)) - set(basis):
            assert not is_ross_sparse(g, list(basis) + [extra])


def test_find_ross_circuits_loop(loop_graph):
    d = find_ross_circuits(loop_graph)
    assert d.basis == ()
    assert d.circuits == ((0,),)
    assert d.reduced == loop_graph
    assert d.contraction_map == (0,)


def test_find_ross_circuits_g2(g2):
    d = find_ross_circuits(g2)
    assert d.basis == (0, 1)
    assert d.circuits == ((2,),)
    assert d.reduced == g2


def test_find_ross_circuits_g_rc_pendant(g_rc_pendant):
    d = find_ross_circuits(g_rc_pendant)
    assert d.basis == (0, 1, 2, 3, 5, 6)
    assert d.circuits == ((0, 1, 2, 3, 4),)
    assert d.reduced.n == 2
    assert d.reduced.triples() == [(1, 0, 0), (1, 0, 0), (0, 0, 1)]
    assert d.contraction_map == (0, 0, 0, 1)
    assert is_member(d.reduced, Family.REFLECTION_22)


def test_find_ross_circuits_loop_pair(loop_pair):
    d = find_ross_circuits(loop_pair)
    assert d.basis == (2,)
    assert d.circuits == ((0,), (1,))
    assert d.reduced == loop_pair


def test_find_ross_circuits_requires_reflection_laman(k4, ross_pair):
    with pytest.raises(NotReflectionLamanError):
        find_ross_circuits(k4)
    with pytest.raises(NotReflectionLamanError):
        find_ross_circuits(ross_pair)


def test_contract_circuits_keeps_outside_edges(g_rc_pendant):
    reduced, mapping = contract_circuits(g_rc_pendant, [(0, 1, 2, 3, 4)])
    assert mapping == (0, 0, 0, 1)
    assert reduced.m == 3


def _brute_force_circuits(g):
    found = []
    for size in range(1, g.m + 1):
        for subset in combinations(range(g.m), size):
            sub, _ = g.induced_by_edges(subset)
            if is_ross_circuit(sub):
                found.append(subset)
    return sorted(found)


def test_circuits_match_brute_force():
    for g in members(Family.REFLECTION_LAMAN):
        d = find_ross_circuits(g)
        assert sorted(d.circuits) == _brute_force_circuits(g), g.triples()


def test_reduction_properties():
    for g in members(Family.REFLECTION_LAMAN):
        d = find_ross_circuits(g)
        assert len(d.circuits) == g.m - len(d.basis)
        spanned = [g.vertices_of(c) for c in d.circuits]
        for a, b in combinations(spanned, 2):
            assert not a & b
        for circuit in d.circuits:
            sub, _ = g.induced_by_edges(circuit)
            assert is_ross_circuit(sub)
        assert is_member(d.reduced, Family.REFLECTION_22), g.triples()
