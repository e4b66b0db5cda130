"""
Management command to emit a direction assignment for a graph.
"""
from apps.corpus.commandline import EXIT_INTERNAL, GraphCommand
from apps.corpus.services.textformat import emit_directions
from apps.directions.exceptions import RetriesExhaustedError
from apps.directions.services.constructions import (
    collapse_directions,
    random_directions,
    special_pair,
)
from apps.sparsity.exceptions import FamilyPreconditionError

MODES = ('random', 'collapse', 'special')


class Command(GraphCommand):
    help = 'Emit random, collapsing (reflection-(2,2)) or special-pair (reflection-Laman) directions'

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument(
            '--mode',
            choices=MODES,
            default='random',
            help='Construction to use (default: random)'
        )
        self.add_seed_argument(parser)
        parser.add_argument(
            '--output',
            type=str,
            default=None,
            help='Write the directions file here instead of stdout'
        )

    def handle(self, *args, **options):
        g = self.load_graph(options['graph'])
        config = self.run_config(options)
        mode = options['mode']
        try:
            if mode == 'random':
                directions = random_directions(g, config)
            elif mode == 'collapse':
                directions = collapse_directions(g, config)
            else:
                directions = special_pair(g, config).directions
        except FamilyPreconditionError as exc:
            self.fail(str(exc))
        except RetriesExhaustedError as exc:
            self.fail(str(exc), EXIT_INTERNAL)
        self.write_text(options['output'], emit_directions(directions))
