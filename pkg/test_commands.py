"""
Tests for the management commands and their exit codes.
"""
import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from apps.corpus.services.catalog import NAMED_GRAPHS
from apps.corpus.services.textformat import parse_directions, read_directions, read_graph
from apps.directions.services.network import is_special_pair
from apps.sparsity.exceptions import NoDecompositionError
from apps.sparsity.services.counts import Family, is_member


def run(name, *args, **options):
    out = StringIO()
    call_command(name, *args, stdout=out, **options)
    return out.getvalue()


def run_failing(name, *args, **options):
    out = StringIO()
    with pytest.raises(CommandError) as excinfo:
        call_command(name, *args, stdout=out, **options)
    return excinfo.value.returncode, out.getvalue()


@pytest.fixture
def graph_file(corpus_dir):
    return lambda name: str(corpus_dir / f'{name}.txt')


@pytest.fixture
def bad_graph(tmp_path):
    path = tmp_path / 'bad.txt'
    path.write_text('n 2\n0 1 2\n')
    return str(path)


def test_check_counts_pass(graph_file):
    output = run('check_counts', graph_file('g-rc'))
    assert 'reflection-laman: pass (n=3, m=5)' in output


def test_check_counts_fail_with_witness(graph_file):
    code, output = run_failing('check_counts', graph_file('k4'), witness=True)
    assert code == 1
    assert 'reflection-laman: fail' in output
    assert '0 0 1 0' in output
    assert "n'=4 m'=6" in output


def test_check_counts_other_family(graph_file):
    code, _ = run_failing('check_counts', graph_file('k4'), family='laman-23', exhaustive=True)
    assert code == 1
    assert 'ross: pass' in run('check_counts', graph_file('ross-pair'), family='ross')


def test_check_counts_edge_count(graph_file):
    code, output = run_failing('check_counts', graph_file('ross-pair'))
    assert code == 1
    assert 'edge count 2 != 3' in output


def test_check_counts_json(graph_file, tmp_path):
    report = tmp_path / 'counts.json'
    run_failing('check_counts', graph_file('k4'), json=str(report))
    data = json.loads(report.read_text())
    assert data['verdict'] == 'fail'
    assert data['witness'] == [0, 1, 2, 3, 4, 5]


def test_usage_errors(graph_file, bad_graph, tmp_path):
    assert run_failing('check_counts', bad_graph)[0] == 2
    assert run_failing('check_counts', graph_file('g-rc'), family='laman')[0] == 2
    assert run_failing('certify', str(tmp_path / 'missing.txt'))[0] == 2


def test_decompose(graph_file, tmp_path):
    report = tmp_path / 'decomposition.json'
    output = run('decompose', graph_file('g-rc'), json=str(report))
    assert 'Tree: [0, 3]' in output
    assert 'Lift structure verified' in output
    assert json.loads(report.read_text())['recolored_gains'] == [0, 1, 1, 0, 1]


def test_decompose_requires_reflection_22(graph_file):
    assert run_failing('decompose', graph_file('k4'))[0] == 1


def test_decompose_internal_failures(graph_file, monkeypatch):
    monkeypatch.setattr('apps.sparsity.management.commands.decompose.lift_structure_check', lambda d: False)
    code, output = run_failing('decompose', graph_file('g-rc'))
    assert code == 3
    assert 'Lift structure check failed' in output

    def no_split(g):
        raise NoDecompositionError('no split')

    monkeypatch.setattr('apps.sparsity.management.commands.decompose.decompose_tree_ref11', no_split)
    assert run_failing('decompose', graph_file('g-rc'))[0] == 3


def test_reduce_graph(graph_file, tmp_path):
    path = tmp_path / 'reduced.txt'
    run('reduce_graph', graph_file('g-rc-pendant'), output=str(path))
    text = path.read_text()
    assert '# circuit 0 1 2 3 4' in text
    assert '# vertex 3 -> 1' in text
    assert read_graph(path).triples() == [(1, 0, 0), (1, 0, 0), (0, 0, 1)]


def test_reduce_graph_requires_reflection_laman(graph_file):
    assert run_failing('reduce_graph', graph_file('k4-negative'))[0] == 1


def test_special_directions(graph_file):
    output = run('directions', graph_file('g-rc'), mode='special', seed=4)
    assert is_special_pair(NAMED_GRAPHS['g-rc'], parse_directions(output, 5))


def test_collapse_directions_command(graph_file):
    assert run_failing('directions', graph_file('ross-pair'), mode='collapse')[0] == 1
    output = run('directions', graph_file('g2'), mode='collapse')
    assert len(parse_directions(output, 3)) == 3


def test_solve_network(graph_file, tmp_path):
    directions = tmp_path / 'loop.dir'
    directions.write_text('0 1 0\n')
    svg = tmp_path / 'loop.svg'
    report = tmp_path / 'network.json'
    output = run('solve_network', graph_file('loop'), str(directions), svg=str(svg), json=str(report))
    assert 'Realization space dimension: 2' in output
    assert 'Special pair: yes' in output
    assert 'mirror-axis' in svg.read_text()
    assert json.loads(report.read_text())['special_pair'] is True


def test_solve_network_bad_directions(graph_file, tmp_path):
    directions = tmp_path / 'short.dir'
    directions.write_text('0 1 0\n')
    assert run_failing('solve_network', graph_file('g2'), str(directions))[0] == 2


def test_directions_file_from_command(graph_file, tmp_path):
    path = tmp_path / 'g2.dir'
    run('directions', graph_file('g2'), mode='special', output=str(path))
    output = run('solve_network', graph_file('g2'), str(path))
    assert 'Special pair: yes' in output
    assert len(read_directions(path, 3)) == 3


def test_certify_member(graph_file, tmp_path):
    report = tmp_path / 'g-rc.json'
    svg = tmp_path / 'g-rc.svg'
    output = run('certify', graph_file('g-rc'), seed=2, json=str(report), svg=str(svg))
    assert 'Combinatorial: reflection-Laman' in output
    assert 'Agreement: minimally rigid' in output
    data = json.loads(report.read_text())
    assert data['agreement'] is True
    assert data['numeric']['rank'] == 5
    assert svg.read_text().count('class="edge-') == 10


def test_certify_non_member(graph_file):
    output = run('certify', graph_file('k4-negative'))
    assert 'Combinatorial: not reflection-Laman' in output
    assert 'Witness: [0, 1, 2, 3, 4, 5]' in output
    assert 'Agreement: not minimally rigid' in output


def test_certify_disagreement_exit_code(graph_file, monkeypatch):
    monkeypatch.setattr('apps.rigidity.services.certification.rigidity_rank', lambda g, p: 0)
    assert run_failing('certify', graph_file('loop'))[0] == 3


def test_generate_graph(tmp_path):
    path = tmp_path / 'generated.txt'
    run('generate_graph', 3, seed=7, output=str(path))
    assert '# reflection-laman member, seed 7' in path.read_text()
    assert is_member(read_graph(path), Family.REFLECTION_LAMAN)
    assert run_failing('generate_graph', 0)[0] == 2


def test_generate_graph_to_stdout():
    output = run('generate_graph', 2, family='ross', seed=1)
    assert output.splitlines()[1] == 'n 2'


def test_oracle(corpus_dir, tmp_path):
    output_path = tmp_path / 'expected.json'
    output = run('oracle', exhaustive_n=1, corpus_dir=str(corpus_dir), output=str(output_path))
    assert f'Written to {output_path}' in output
    data = json.loads(output_path.read_text())
    graphs = data['graphs']
    assert graphs['loop']['memberships']['reflection-laman'] is True
    assert graphs['corpus/k4-negative']['memberships']['reflection-22'] is True
    assert graphs['exhaustive-n1-00000']['generically_minimally_rigid'] is False
    assert all(result['agreement'] for result in graphs.values())
