"""
Management command to check a graph against a sparsity family.
"""
from apps.corpus.commandline import GraphCommand
from apps.sparsity.services.counts import (
    Family,
    check_counts,
    connected_subgraph_check,
    global_condition,
)


class Command(GraphCommand):
    help = 'Check the sparsity counts and the edge count of a family (exit 1 on failure)'

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        self.add_family_argument(parser)
        parser.add_argument(
            '--witness',
            action='store_true',
            help='Print the violating edges in file edge order'
        )
        parser.add_argument(
            '--exhaustive',
            action='store_true',
            help='Use the literal all-subsets check instead of the connected search'
        )
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        g = self.load_graph(options['graph'])
        family = self.family(options)
        check = check_counts if options['exhaustive'] else connected_subgraph_check
        report = check(g, family)
        edge_count_ok = global_condition(g, family)

        if options['json']:
            self.write_json(options['json'], dict(report.as_dict(), global_condition=edge_count_ok))

        if not report.passed:
            n, m, c, c0 = report.counts
            self.stdout.write(self.style.WARNING(
                f'{family.value}: fail\n'
                f"Witness counts: n'={n} m'={m} c'={c} c'_0={c0} bound={report.bound}"
            ))
            if options['witness']:
                for i in report.witness:
                    e = g.edges[i]
                    self.stdout.write(f'{i} {e.tail} {e.head} {int(e.gain)}')
            self.fail(f'{family.value} counts violated')
        if not edge_count_ok:
            if family is Family.REFLECTION_11:
                detail = 'some component is not a map-graph component with non-trivial rho'
            else:
                detail = f'edge count {g.m} != {family.target_edges(g.n)}'
            self.stdout.write(self.style.WARNING(f'{family.value}: fail\n{detail}'))
            self.fail(f'{family.value} global condition violated')
        self.stdout.write(self.style.SUCCESS(f'{family.value}: pass (n={g.n}, m={g.m})'))
