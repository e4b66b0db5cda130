"""
Management command to generate a random member of a family.
"""
from apps.corpus.commandline import EXIT_INTERNAL, EXIT_USAGE, GraphCommand
from apps.corpus.exceptions import GenerationFailedError
from apps.corpus.services.generator import generate
from apps.corpus.services.textformat import emit_graph


class Command(GraphCommand):
    help = 'Generate a random graph on n vertices that belongs to a family'

    def add_arguments(self, parser):
        parser.add_argument('n', type=int, help='Number of vertices')
        self.add_family_argument(parser)
        self.add_seed_argument(parser)
        parser.add_argument(
            '--output',
            type=str,
            default=None,
            help='Write the graph here instead of stdout'
        )

    def handle(self, *args, **options):
        family = self.family(options)
        config = self.run_config(options)
        if options['n'] < 1:
            self.fail('n must be at least 1', EXIT_USAGE)
        try:
            g = generate(options['n'], family, config)
        except GenerationFailedError as exc:
            self.fail(str(exc), EXIT_INTERNAL)
        comments = [f'{family.value} member, seed {config.seed}']
        self.write_text(options['output'], emit_graph(g, comments))
