"""Unit tests for the management commands.

Each command runs through ``call_command`` against the specs in ``algebras/``.
Catalogs are cached in a temporary directory shared by the whole test case.

"""
from contextlib import redirect_stderr
from io import StringIO
import json
import os
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from quiverlab.management.commands import indec

# pylint: disable=R0904
# Classes inheriting from TestCase will have 60+ too many public methods, and
# that's not something I have control over. Ignore it.

ALGEBRAS_DIR = os.path.join(os.path.dirname(__file__), 'algebras')


def spec(name):
    """Return the path of ``algebras/<name>``."""
    return os.path.join(ALGEBRAS_DIR, name)


class CommandTestCase(SimpleTestCase):
    """Tests for the ``indec``, ``thick``, ``bijection``, ``recollement`` and
    ``silting`` commands."""

    @classmethod
    def setUpClass(cls):
        """Create the shared catalog cache."""
        super(CommandTestCase, cls).setUpClass()
        cls._tempdir = tempfile.TemporaryDirectory()

    @classmethod
    def tearDownClass(cls):
        """Remove the shared catalog cache."""
        cls._tempdir.cleanup()
        super(CommandTestCase, cls).tearDownClass()

    def run_command(self, *args, **options):
        """Run a command and return its parsed JSON report."""
        return json.loads(self.run_text(*args, **options))

    def run_text(self, *args, **options):
        """Run a command and return what it wrote to stdout."""
        out = StringIO()
        options.setdefault('cache_dir', self._tempdir.name)
        call_command(*args, stdout=out, **options)
        return out.getvalue()

    def assert_exits(self, code, *args, **options):
        """Assert that a command fails with exit code ``code``."""
        options.setdefault('cache_dir', self._tempdir.name)
        with self.assertRaises(CommandError) as context:
            call_command(*args, stdout=StringIO(), **options)
        self.assertEqual(context.exception.returncode, code)

    def test_indec_a2(self):
        """``kA2`` has three indecomposables; the report carries the run
        parameters."""
        report = self.run_command('indec', 'enumerate', spec('a2.json'))
        self.assertEqual(report['status'], 'pass')
        self.assertEqual(report['count'], 3)
        self.assertEqual([item['label'] for item in report['items']],
                         ['S2', 'S1', 'P1'])
        self.assertEqual(report['prime'], 101)
        self.assertEqual(report['seed'], 42)
        self.assertEqual(report['algebra']['dimension'], 3)
        self.assertEqual(report['bounds']['dim_bound'], 4)

    def test_indec_triangular(self):
        """A triangular spec is labelled by triples."""
        report = self.run_command('indec', 'enumerate', spec('t2_a2.json'))
        self.assertEqual(report['count'], 11)
        self.assertIn('(S1,P1)_f', [item['label'] for item in report['items']])

    def test_deterministic(self):
        """Two runs give the same bytes."""
        first = self.run_text('indec', 'enumerate', spec('square.json'))
        second = self.run_text('indec', 'enumerate', spec('square.json'),
                               cache_dir='')
        self.assertEqual(first, second)

    def test_table_output(self):
        """``--output table`` prints aligned tables."""
        text = self.run_text('indec', 'enumerate', spec('a2.json'),
                             output='table')
        lines = text.splitlines()
        self.assertEqual(lines[0], 'indec enumerate: pass')
        self.assertTrue(any(line.startswith('2     | P1') for line in lines))

    def test_thick_enumerate(self):
        """``mod kA2`` has five thick subcategories."""
        report = self.run_command('thick', 'enumerate', spec('a2.json'))
        self.assertEqual(report['count'], 5)
        self.assertEqual(report['subcategories'][-1], ['S2', 'S1', 'P1'])

    def test_thick_closure(self):
        """The projectives generate everything."""
        report = self.run_command('thick', 'closure', spec('a2.json'),
                                  gens=['S2', 'P1'])
        self.assertEqual(report['closure'], ['S2', 'S1', 'P1'])
        self.assertEqual(report['trace'][0]['added'], ['S1'])

    def test_bijection(self):
        """The bijection holds for ``kA2``."""
        report = self.run_command('bijection', 'verify', spec('a2.json'))
        self.assertEqual(report['status'], 'pass')
        self.assertEqual(len(report['pairs']), 5)

    def test_recollement_restricted(self):
        """Restricting to a thick ``V`` leaves ``add(S1)`` on the right."""
        report = self.run_command(
            'recollement', 'verify', spec('a2.json'),
            restrict=['(S2,0)', '(P1,0)', '(S1,0)', '(S1,S1)_1', '(0,S1)'],
        )
        self.assertEqual(report['status'], 'pass')
        self.assertEqual(report['restricted']['C'], ['S1'])

    def test_silting_check(self):
        """The projectives are silting; the simples are not."""
        report = self.run_command('silting', 'check', spec('a2.json'),
                                  gens=['S2', 'P1'])
        self.assertEqual(report['M_check'], ['S2', 'P1'])
        self.assert_exits(1, 'silting', 'check', spec('a2.json'),
                          gens=['S2', 'S1'])

    def test_silting_glue_unverified(self):
        """Gluing the projectives cannot verify the tower description."""
        self.assert_exits(2, 'silting', 'glue', spec('a2.json'),
                          ma=['S2', 'P1'], mc=['S2', 'P1'])

    def test_silting_restrict(self):
        """The projectives of the square restrict to the projectives."""
        report = self.run_command(
            'silting', 'restrict', spec('a2.json'),
            m=['(S2,0)', '(S2,S2)_1', '(P1,0)', '(P1,P1)_1'],
        )
        self.assertEqual(report['candidate_a'], ['S2', 'P1'])

    def test_bounds_exceeded(self):
        """A tiny enumeration budget exits with 2."""
        self.assert_exits(2, 'indec', 'enumerate', spec('square.json'),
                          budget=1, cache_dir='')

    def test_input_errors(self):
        """Bad verbs, selectors, flags and preconditions exit with 3."""
        self.assert_exits(3, 'indec', 'list', spec('a2.json'))
        self.assert_exits(3, 'indec', 'enumerate', spec('missing.json'))
        self.assert_exits(3, 'indec', 'enumerate', spec('a2.json'),
                          field_prime=91)
        self.assert_exits(3, 'thick', 'closure', spec('a2.json'),
                          gens=['Q7'])
        self.assert_exits(3, 'recollement', 'verify', spec('a2.json'),
                          restrict=['(S2,0)'])

    def test_empty_spec(self):
        """An empty spec file exits with 3."""
        with tempfile.NamedTemporaryFile('w', suffix='.yaml') as empty:
            self.assert_exits(3, 'indec', 'enumerate', empty.name)

    def test_bad_flag(self):
        """Unknown flags on the command line exit with 3."""
        command = indec.Command(stdout=StringIO(), stderr=StringIO())
        with redirect_stderr(StringIO()):
            with self.assertRaises(SystemExit) as context:
                command.run_from_argv(['manage.py', 'indec', 'enumerate',
                                       spec('a2.json'), '--no-such-flag'])
        self.assertEqual(context.exception.code, 3)


class LinterTestCase(SimpleTestCase):
    """Tests for the ``linter`` command."""

    def test_list(self):
        """``--list`` names the files that would be linted."""
        out = StringIO()
        call_command('linter', list=True, stdout=out)
        files = out.getvalue().splitlines()
        self.assertTrue(any(name.endswith('silting.py') for name in files))
        self.assertEqual(files, sorted(files))
