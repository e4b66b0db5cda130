"""
Tests for certify(): both verdicts, the report and disagreements.
"""
import json

import pytest

from apps.corpus.services.catalog import NAMED_GRAPHS
from apps.corpus.services.textformat import emit_graph
from apps.rigidity.exceptions import InternalDisagreementError
from apps.rigidity.services.certification import certify
from apps.rigidity.services.framework import rigidity_rank
from apps.rigidity.tasks import certify_graph, sweep_graph
from config.runconfig import RunConfig


def test_certify_loop(loop_graph, config):
    report = certify(loop_graph, config)
    assert report.combinatorial_verdict
    assert report.numeric_verdict
    assert report.rank == 1
    assert report.agreement
    assert report.special is not None


def test_certify_g_rc(g_rc, config):
    report = certify(g_rc, config)
    assert report.combinatorial_verdict
    assert report.rank == 5
    assert report.minimal
    assert rigidity_rank(g_rc, report.placement) == 5


def test_certify_k4_negative(k4_negative, config):
    report = certify(k4_negative, config)
    assert not report.combinatorial_verdict
    assert not report.numeric_verdict
    assert report.counts.witness == (0, 1, 2, 3, 4, 5)
    assert report.rank < report.target
    assert report.special is None


def test_certify_overbraced(config):
    report = certify(NAMED_GRAPHS['g2-overbraced'], config)
    assert not report.combinatorial_verdict
    assert report.counts.witness == (1, 3)
    assert not report.minimal
    assert report.agreement


def test_certify_wrong_edge_count(ross_pair, config):
    report = certify(ross_pair, config)
    assert report.counts.passed
    assert not report.combinatorial_verdict
    assert report.as_dict()['combinatorial']['reason'] == 'edge count 2 != 3'


def test_report_schema(g_rc, config):
    data = certify(g_rc, config).as_dict()
    assert set(data) == {'graph', 'combinatorial', 'numeric', 'special_pair', 'agreement', 'config'}
    assert data['graph'] == {'n': 3, 'm': 5}
    assert data['numeric']['rank'] == 5
    assert data['config']['seed'] == 7
    assert len(data['special_pair']['directions']) == 5


def test_reports_are_reproducible(g_rc_pendant):
    first = certify(g_rc_pendant, RunConfig(seed=5)).to_json()
    second = certify(g_rc_pendant, RunConfig(seed=5)).to_json()
    assert first == second
    assert json.loads(first)['agreement'] is True


def test_disagreement_raises(monkeypatch, loop_graph, config):
    monkeypatch.setattr('apps.rigidity.services.certification.rigidity_rank', lambda g, p: 0)
    with pytest.raises(InternalDisagreementError) as excinfo:
        certify(loop_graph, config)
    report = excinfo.value.report
    assert report.combinatorial_verdict
    assert not report.numeric_verdict
    assert not report.agreement


def test_certify_graph_task():
    data = certify_graph.delay(emit_graph(NAMED_GRAPHS['g2']), 3).get()
    assert data['agreement']
    assert data['combinatorial']['verdict']


def test_sweep_graph_task():
    data = sweep_graph.delay(emit_graph(NAMED_GRAPHS['k4-negative']), 0).get()
    assert data['memberships']['reflection-22']
    assert not data['memberships']['reflection-laman']
    assert not data['generically_minimally_rigid']
    assert data['agreement']
