"""Create a command named ``linter``."""
import os

from django.core.management.base import BaseCommand
from pylint.lint import Run

APP_DIR = os.path.abspath(os.path.join(
    os.path.dirname(os.path.realpath(__file__)),
    '..',
    '..',
))


def python_files(root=APP_DIR):
    """Return the .py files below ``root``, sorted, relative to the current
    directory."""
    found = []
    for directory, _, files in os.walk(root):
        for name in files:
            if name.endswith('.py'):
                found.append(os.path.relpath(os.path.join(directory, name)))
    return sorted(found)


class Command(BaseCommand):
    """Defines how to register the ``linter`` command with ``manage.py``."""
    help = 'Lint all .py files in the quiverlab application, using Pylint.'

    def add_arguments(self, parser):
        parser.add_argument('--list', action='store_true', dest='list',
                            help='print the files instead of linting them')

    def handle(self, *args, **options):
        """Search for .py files and lint them."""
        files = python_files()
        if options['list']:
            self.stdout.write('\n'.join(files))
            return
        Run(files)
