"""
Management command to contract the Ross-circuits of a reflection-Laman graph.
"""
from apps.corpus.commandline import GraphCommand
from apps.corpus.services.textformat import emit_graph
from apps.sparsity.exceptions import FamilyPreconditionError
from apps.sparsity.services.decomposition import find_ross_circuits


class Command(GraphCommand):
    help = 'Emit the reduced graph of a reflection-Laman graph, with the contraction map as comments'

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument(
            '--output',
            type=str,
            default=None,
            help='Write the reduced graph here instead of stdout'
        )

    def handle(self, *args, **options):
        g = self.load_graph(options['graph'])
        try:
            decomposition = find_ross_circuits(g)
        except FamilyPreconditionError as exc:
            self.fail(str(exc))

        comments = [f'ross-basis {" ".join(map(str, decomposition.basis))}']
        comments += [f'circuit {" ".join(map(str, c))}' for c in decomposition.circuits]
        comments += [
            f'vertex {v} -> {w}' for v, w in enumerate(decomposition.contraction_map)
        ]
        self.write_text(options['output'], emit_graph(decomposition.reduced, comments))
