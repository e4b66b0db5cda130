"""
Corpus sweeps: reflection-Laman membership against exact ranks and
direction networks.

The n <= 3 sweeps run by default; the larger ones are marked slow
(pytest -m slow).
"""
import pytest

from apps.corpus.services.catalog import NAMED_GRAPHS, exhaustive_graphs, generated_corpus
from apps.directions.services.constructions import random_directions, special_pair
from apps.directions.services.network import is_special_pair, is_strongly_faithful, realization_space
from apps.rigidity.services.certification import certify
from apps.rigidity.services.framework import is_generically_minimally_rigid
from apps.sparsity.services.counts import Family, is_member
from config.runconfig import RunConfig


def exhaustive(max_n):
    for n in range(1, max_n + 1):
        yield from exhaustive_graphs(n)


def sweep_rigidity(graphs, config):
    for g in graphs:
        member = is_member(g, Family.REFLECTION_LAMAN, exhaustive=True)
        assert is_generically_minimally_rigid(g, config) == member, g.triples()


def test_minimal_rigidity_matches_counts_small(config):
    sweep_rigidity(list(exhaustive(3)) + list(NAMED_GRAPHS.values()), config)


@pytest.mark.slow
def test_minimal_rigidity_matches_counts_n4(config):
    sweep_rigidity(exhaustive_graphs(4), config)


def test_special_pairs_exist_on_small_members(config):
    for g in exhaustive(3):
        if is_member(g, Family.REFLECTION_LAMAN):
            pair = special_pair(g, config)
            assert is_special_pair(g, pair.directions), g.triples()


@pytest.mark.slow
def test_special_pairs_on_generated_members():
    for entry in generated_corpus(6, seeds=(0, 1, 2)):
        report = certify(entry.graph, RunConfig(seed=0))
        assert report.combinatorial_verdict, entry.name
        assert report.agreement, entry.name


def sweep_non_members(graphs, seeds):
    for g in graphs:
        if is_member(g, Family.REFLECTION_LAMAN):
            continue
        for seed in seeds:
            d = random_directions(g, RunConfig(seed=seed))
            assert not is_special_pair(g, d), (g.triples(), seed)


def test_non_members_have_no_special_pair_for_random_directions():
    sweep_non_members(list(exhaustive(3)) + list(NAMED_GRAPHS.values()), range(3))


@pytest.mark.slow
def test_non_members_have_no_special_pair_twenty_seeds():
    sweep_non_members(exhaustive(4), range(20))


def test_generic_directions_on_ross_graphs():
    for n in (2, 3):
        for g in exhaustive_graphs(n, 2 * n - 2):
            if not is_member(g, Family.ROSS):
                continue
            for seed in range(5):
                space = realization_space(g, random_directions(g, RunConfig(seed=seed)))
                assert space.dimension == 2, g.triples()
                assert is_strongly_faithful(space), g.triples()


def test_generic_directions_collapse_reflection_22_graphs():
    for g in exhaustive(3):
        if not is_member(g, Family.REFLECTION_22):
            continue
        for seed in range(5):
            space = realization_space(g, random_directions(g, RunConfig(seed=seed)))
            assert space.dimension == 1, g.triples()
            assert space.contains_vertical_translation()
