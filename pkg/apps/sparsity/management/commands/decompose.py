"""
Management command to split a reflection-(2,2) graph into a spanning tree
and a reflection-(1,1) graph.
"""
from apps.corpus.commandline import EXIT_INTERNAL, GraphCommand
from apps.sparsity.exceptions import FamilyPreconditionError, NoDecompositionError
from apps.sparsity.services.decomposition import (
    decompose_tree_ref11,
    lift_structure_check,
    map_components,
)


class Command(GraphCommand):
    help = 'Print the tree/map decomposition and the switched gains of a reflection-(2,2) graph'

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        g = self.load_graph(options['graph'])
        try:
            decomposition = decompose_tree_ref11(g)
        except FamilyPreconditionError as exc:
            self.fail(str(exc))
        except NoDecompositionError as exc:
            self.fail(str(exc), EXIT_INTERNAL)

        recolored = decomposition.recolored
        self.stdout.write(f'Tree: {list(decomposition.tree)}')
        self.stdout.write(f'Map part: {list(decomposition.map_part)}')
        for component in map_components(recolored, decomposition.map_part):
            self.stdout.write(f'  component {list(component.edges)}, cycle {list(component.cycle)}')
        self.stdout.write('Switched gains:')
        for i, (before, after) in enumerate(zip(g.edges, recolored.edges)):
            self.stdout.write(f'  {i} {before.tail} {before.head}: {int(before.gain)} -> {int(after.gain)}')
        lifts_ok = lift_structure_check(decomposition)
        if options['json']:
            self.write_json(options['json'], dict(decomposition.as_dict(), lift_structure=lifts_ok))
        if lifts_ok:
            self.stdout.write(self.style.SUCCESS('Lift structure verified'))
        else:
            self.stdout.write(self.style.ERROR('Lift structure check failed'))
            self.fail('lift structure check failed', EXIT_INTERNAL)
