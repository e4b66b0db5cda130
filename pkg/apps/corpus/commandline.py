"""
Shared plumbing for the graph management commands.

Exit codes: 0 success, 1 semantic failure, 2 usage or parse error,
3 internal disagreement or exhausted retries.
"""
import json
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from apps.corpus.exceptions import GraphParseError
from apps.corpus.services.textformat import read_directions, read_graph
from apps.sparsity.services.counts import Family
from config.runconfig import RunConfig

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class GraphCommand(BaseCommand):
    """Base class for commands that read a graph file."""

    def add_graph_argument(self, parser):
        parser.add_argument('graph', type=str, help='Graph file (header "n <count>", then "<tail> <head> <gain>")')

    def add_seed_argument(self, parser):
        parser.add_argument(
            '--seed',
            type=int,
            default=None,
            help='Random seed (default: REFRIG_SEED)'
        )

    def add_family_argument(self, parser, default=Family.REFLECTION_LAMAN.value):
        parser.add_argument(
            '--family',
            type=str,
            default=default,
            help=f'Family: {", ".join(f.value for f in Family)} (default: {default})'
        )

    def add_json_argument(self, parser):
        parser.add_argument(
            '--json',
            type=str,
            default=None,
            help='Also write a JSON report to this path'
        )

    def fail(self, message, returncode=EXIT_FAIL):
        raise CommandError(message, returncode=returncode)

    def load_graph(self, path):
        try:
            return read_graph(path)
        except GraphParseError as exc:
            self.fail(f'{path}: {exc}', EXIT_USAGE)
        except OSError as exc:
            self.fail(f'cannot read {path}: {exc}', EXIT_USAGE)

    def load_directions(self, path, m):
        try:
            return read_directions(path, m)
        except GraphParseError as exc:
            self.fail(f'{path}: {exc}', EXIT_USAGE)
        except OSError as exc:
            self.fail(f'cannot read {path}: {exc}', EXIT_USAGE)

    def family(self, options):
        try:
            return Family.from_name(options['family'])
        except ValueError as exc:
            self.fail(str(exc), EXIT_USAGE)

    def run_config(self, options):
        return RunConfig.from_settings(seed=options.get('seed'))

    def write_json(self, path, data):
        Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + '\n')
        self.stdout.write(f'JSON report written to {path}')

    def write_text(self, path, text):
        """Write text to path, or to stdout when path is None."""
        if path:
            Path(path).write_text(text)
            self.stdout.write(f'Written to {path}')
        else:
            self.stdout.write(text, ending='')
