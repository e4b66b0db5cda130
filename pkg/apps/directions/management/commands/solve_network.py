"""
Management command to solve a direction network exactly.
"""
from apps.corpus.commandline import GraphCommand
from apps.corpus.services.svg import render_svg
from apps.directions.services.network import classify, is_special_pair


class Command(GraphCommand):
    help = 'Print rank, realization-space dimension and classification of a direction network'

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        parser.add_argument('directions', type=str, help='Directions file ("<edge> <dx> <dy>" per line)')
        parser.add_argument(
            '--svg',
            type=str,
            default=None,
            help='Draw the witness realization (or the collapsed one) to this SVG file'
        )
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        g = self.load_graph(options['graph'])
        directions = self.load_directions(options['directions'], g.m)
        classification = classify(g, directions)
        special = is_special_pair(g, directions)

        self.stdout.write(f'Rank: {2 * g.n - classification.dimension} of {2 * g.n} unknowns')
        self.stdout.write(f'Realization space dimension: {classification.dimension}')
        if classification.faithful_exists:
            self.stdout.write(self.style.SUCCESS('Faithful realizations exist'))
            for i, (x, y) in enumerate(classification.witness):
                self.stdout.write(f'  p_{i} = ({x}, {y})')
        elif classification.collapsed_only:
            self.stdout.write(self.style.WARNING('Only collapsed realizations'))
        else:
            collapsed = [i for i, ok in enumerate(classification.never_collapsed) if not ok]
            self.stdout.write(self.style.WARNING(f'Edges collapsed in every realization: {collapsed}'))
        self.stdout.write(f'Special pair: {"yes" if special else "no"}')

        if options['svg']:
            placement = classification.witness or tuple((0, 1) for _ in range(g.n))
            render_svg(g, placement, options['svg'])
            self.stdout.write(f'SVG written to {options["svg"]}')
        if options['json']:
            self.write_json(options['json'], dict(classification.as_dict(), special_pair=special))
