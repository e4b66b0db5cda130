"""
The in-repo graph corpus.

Named graphs carry analytic expectations; the exhaustive part lists every
colored graph with n vertices and 2n - 1 edges (parallel multiplicity at
most 2, at most one loop per vertex) up to relabeling; generated members
come from the generator with fixed seeds.
"""
from dataclasses import dataclass, field
from itertools import permutations
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from apps.corpus.services.generator import generate
from apps.corpus.services.textformat import read_graph
from apps.gain_graphs.graph import ColoredGraph
from apps.sparsity.services.counts import Family
from config.runconfig import RunConfig


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: ColoredGraph
    provenance: str
    expected: Dict[str, bool] = field(default_factory=dict)


def _graph(n, triples) -> ColoredGraph:
    return ColoredGraph.from_triples(n, triples)


K4_EDGES = [(0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 2, 0), (1, 3, 0), (2, 3, 0)]
G_RC_EDGES = [(0, 1, 0), (0, 1, 1), (1, 2, 0), (1, 2, 1), (2, 0, 0)]

NAMED_GRAPHS: Dict[str, ColoredGraph] = {
    'loop': _graph(1, [(0, 0, 1)]),
    'g2': _graph(2, [(0, 1, 0), (0, 1, 1), (0, 0, 1)]),
    'ross-pair': _graph(2, [(0, 1, 0), (0, 1, 1)]),
    'g-rc': _graph(3, G_RC_EDGES),
    'g-rc-pendant': _graph(4, G_RC_EDGES + [(3, 2, 0), (3, 0, 0)]),
    'loop-pair': _graph(2, [(0, 0, 1), (1, 1, 1), (0, 1, 0)]),
    'k4': _graph(4, K4_EDGES),
    'k4-negative': _graph(5, K4_EDGES + [(0, 4, 1), (1, 4, 1), (4, 4, 1)]),
    'violator-21': _graph(3, [(0, 1, 0), (0, 1, 1), (0, 0, 1), (1, 1, 1), (1, 2, 0)]),
    'g2-overbraced': _graph(2, [(0, 1, 0), (0, 1, 1), (0, 0, 1), (0, 1, 1)]),
}

# Memberships that follow from the counts by hand.
ANALYTIC: Dict[str, Dict[str, bool]] = {
    'loop': {'reflection-laman': True, 'ross': False, 'reflection-22': True, 'ross-circuit': True},
    'g2': {'reflection-laman': True, 'ross': False, 'reflection-22': True, 'ross-circuit': False},
    'ross-pair': {'reflection-laman': False, 'ross': True, 'reflection-22': False},
    'g-rc': {'reflection-laman': True, 'ross': False, 'reflection-22': True, 'ross-circuit': True},
    'g-rc-pendant': {'reflection-laman': True, 'reflection-22': True, 'ross-circuit': False},
    'loop-pair': {'reflection-laman': True, 'reflection-22': True, 'ross-circuit': False},
    'k4': {'reflection-laman': False, 'laman-23': False, 'ross-circuit': False},
    'k4-negative': {'reflection-laman': False, 'reflection-22': True},
    'violator-21': {'reflection-laman': False, 'plain-21': False},
    'g2-overbraced': {'reflection-laman': False},
}


def named_corpus() -> List[CorpusEntry]:
    return [
        CorpusEntry(name, graph, 'analytic', ANALYTIC.get(name, {}))
        for name, graph in NAMED_GRAPHS.items()
    ]


def load_directory(path) -> List[CorpusEntry]:
    """Graph files (*.txt) of a corpus directory, by file name."""
    return [
        CorpusEntry(f'corpus/{file.stem}', read_graph(file), f'file:{file.name}')
        for file in sorted(Path(path).glob('*.txt'))
    ]


def canonical_form(n: int, triples) -> Tuple[Tuple[int, int, int], ...]:
    """Smallest sorted edge list over all relabelings; edges are undirected."""
    best = None
    for perm in permutations(range(n)):
        relabeled = tuple(sorted(
            (min(perm[t], perm[h]), max(perm[t], perm[h]), gain) for t, h, gain in triples
        ))
        if best is None or relabeled < best:
            best = relabeled
    return best


PAIR_OPTIONS = ((), (0,), (1,), (0, 0), (0, 1), (1, 1))
LOOP_OPTIONS = ((), (0,), (1,))


def exhaustive_graphs(n: int, m: Optional[int] = None) -> Iterator[ColoredGraph]:
    """
    Every colored graph on n vertices with m edges (default 2n - 1), up to
    relabeling, in a deterministic order.
    """
    m = 2 * n - 1 if m is None else m
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    slots = [(pair, PAIR_OPTIONS) for pair in pairs] + [((v, v), LOOP_OPTIONS) for v in range(n)]
    seen = set()
    found = []

    def fill(k, remaining, chosen):
        if remaining < 0:
            return
        if k == len(slots):
            if remaining == 0:
                key = canonical_form(n, chosen)
                if key not in seen:
                    seen.add(key)
                    found.append(key)
            return
        (tail, head), options = slots[k]
        for option in options:
            fill(k + 1, remaining - len(option), chosen + [(tail, head, gain) for gain in option])

    fill(0, m, [])
    for key in sorted(found):
        yield ColoredGraph.from_triples(n, key)


def exhaustive_corpus(max_n: int) -> List[CorpusEntry]:
    entries = []
    for n in range(1, max_n + 1):
        for index, graph in enumerate(exhaustive_graphs(n)):
            entries.append(CorpusEntry(f'exhaustive-n{n}-{index:05d}', graph, 'exhaustive'))
    return entries


def generated_corpus(max_n: int, families=(Family.REFLECTION_LAMAN,), seeds=(0, 1, 2)) -> List[CorpusEntry]:
    """Generated members per family; expectations are membership by construction."""
    entries = []
    for family in families:
        for n in range(1, max_n + 1):
            for seed in seeds:
                graph = generate(n, family, RunConfig(seed=seed))
                entries.append(CorpusEntry(
                    f'generated-{family.value}-n{n}-s{seed}', graph, 'generated', {family.value: True},
                ))
    return entries
