"""
Management command to recompute the corpus expectations.

Family memberships come from the literal all-subsets count check; the
generic minimal rigidity verdict comes from exact ranks. Graphs are fanned
out as Celery tasks and collected in input order.
"""
import json
import logging
from pathlib import Path

from django.conf import settings

from apps.corpus.commandline import EXIT_INTERNAL, GraphCommand
from apps.corpus.services.catalog import exhaustive_corpus, load_directory, named_corpus
from apps.corpus.services.textformat import emit_graph
from apps.rigidity.tasks import sweep_graph

logger = logging.getLogger(__name__)


class Command(GraphCommand):
    help = 'Recompute expected memberships and run the minimal rigidity equivalence sweep'

    def add_arguments(self, parser):
        parser.add_argument(
            '--exhaustive-n',
            type=int,
            default=3,
            help='Include every graph with n <= this many vertices and 2n - 1 edges (default: 3)'
        )
        parser.add_argument(
            '--corpus-dir',
            type=str,
            default=None,
            help='Corpus directory of *.txt graphs (default: REFRIG_CORPUS_DIR)'
        )
        parser.add_argument(
            '--output',
            type=str,
            default=None,
            help='Where to write expected.json (default: <corpus-dir>/expected.json)'
        )
        self.add_seed_argument(parser)

    def handle(self, *args, **options):
        corpus_dir = Path(options['corpus_dir'] or settings.REFRIG['CORPUS_DIR'])
        output = Path(options['output'] or corpus_dir / 'expected.json')
        config = self.run_config(options)

        entries = named_corpus()
        if corpus_dir.is_dir():
            entries += load_directory(corpus_dir)
        entries += exhaustive_corpus(options['exhaustive_n'])
        self.stdout.write(f'Dispatching {len(entries)} graphs...')

        pending = [
            sweep_graph.delay(emit_graph(entry.graph), config.seed) for entry in entries
        ]
        results = {}
        disagreements = []
        for entry, job in zip(entries, pending):
            result = job.get()
            result['provenance'] = entry.provenance
            results[entry.name] = result
            if not result['agreement']:
                disagreements.append(entry.name)
                logger.warning("%s: membership and rank verdicts disagree", entry.name)
            for key, value in entry.expected.items():
                if key in result['memberships'] and result['memberships'][key] != value:
                    disagreements.append(entry.name)
                    logger.warning("%s: %s expected %s", entry.name, key, value)

        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(json.dumps({'seed': config.seed, 'graphs': results}, indent=2, sort_keys=True) + '\n')
        members = sum(1 for r in results.values() if r['memberships']['reflection-laman'])
        self.stdout.write(
            self.style.SUCCESS(
                f'\nGraphs: {len(results)}\n'
                f'Reflection-Laman: {members}\n'
                f'Written to {output}'
            )
        )
        if disagreements:
            self.stdout.write(self.style.ERROR(f'Disagreements: {", ".join(sorted(set(disagreements)))}'))
            self.fail(f'{len(set(disagreements))} disagreement(s)', EXIT_INTERNAL)
