"""
Management command to certify generic minimal rigidity of a reflection framework.
"""
from apps.corpus.commandline import EXIT_INTERNAL, GraphCommand
from apps.corpus.services.svg import render_svg
from apps.directions.exceptions import RetriesExhaustedError
from apps.rigidity.exceptions import InternalDisagreementError
from apps.rigidity.services.certification import certify


class Command(GraphCommand):
    help = 'Decide reflection-Laman membership and confirm it with an exact rank certificate'

    def add_arguments(self, parser):
        self.add_graph_argument(parser)
        self.add_seed_argument(parser)
        self.add_json_argument(parser)
        parser.add_argument(
            '--svg',
            type=str,
            default=None,
            help='Draw the certificate placement to this SVG file'
        )

    def handle(self, *args, **options):
        g = self.load_graph(options['graph'])
        config = self.run_config(options)
        try:
            report = certify(g, config)
        except InternalDisagreementError as exc:
            if options['json']:
                self.write_json(options['json'], exc.report.as_dict())
            self.stdout.write(self.style.ERROR(str(exc)))
            self.fail(str(exc), EXIT_INTERNAL)
        except RetriesExhaustedError as exc:
            self.fail(str(exc), EXIT_INTERNAL)

        if report.combinatorial_verdict:
            self.stdout.write(self.style.SUCCESS('Combinatorial: reflection-Laman'))
            special = report.special
            self.stdout.write(
                f'Special pair after {special.attempts} attempt(s); '
                f'circuits {[list(c) for c in special.circuits]}, special edges {list(special.special_edges)}'
            )
        else:
            self.stdout.write(self.style.WARNING('Combinatorial: not reflection-Laman'))
            if not report.counts.passed:
                self.stdout.write(f'Witness: {list(report.counts.witness)}')
            else:
                self.stdout.write(f'Edge count {g.m} != {report.target}')
        self.stdout.write(
            f'Numeric: rank {report.rank} of {report.target}, '
            f'minimal {"yes" if report.minimal else "no"}'
        )
        verdict = 'minimally rigid' if report.numeric_verdict else 'not minimally rigid'
        self.stdout.write(self.style.SUCCESS(f'Agreement: {verdict}'))

        if options['json']:
            self.write_json(options['json'], report.as_dict())
        if options['svg']:
            render_svg(g, report.placement, options['svg'])
            self.stdout.write(f'SVG written to {options["svg"]}')
