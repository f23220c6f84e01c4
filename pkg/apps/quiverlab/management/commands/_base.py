"""Shared plumbing for the quiverlab commands.

Every command takes a verb and an algebra spec file, plus the global flags
defined here. The report goes to stdout. The exit code tells how the run went:

0 all checks passed;
1 a check failed (the report names a witness);
2 a bound was exceeded, or a hypothesis could not be verified;
3 the input was bad: an unreadable spec, a bad selector or flag, or a failed
  precondition.

"""
import logging
import sys

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
import yaml

from quiverlab import cache, quiver, recollement, subcat
from quiverlab.exceptions import QuiverLabError
from quiverlab.forms import RunOptionsForm, option_defaults
from quiverlab.reports import FAIL, UNVERIFIED, report_emit

logger = logging.getLogger(__name__)

CHECK_FAILED = 1
UNDECIDED = 2
INPUT_ERROR = 3


def load_spec(path):
    """Read an algebra spec, JSON or YAML, from ``path``.

    Raise ``ValidationError`` if the file is unreadable, empty or not a spec.

    """
    try:
        with open(path) as stream:
            spec = yaml.safe_load(stream)
    except OSError as error:
        raise ValidationError('Cannot read {}: {}.'.format(path, error))
    except yaml.YAMLError as error:
        raise ValidationError('{} is not valid JSON or YAML: {}.'.format(
            path, error
        ))
    if spec is None:
        raise ValidationError('{} is empty.'.format(path))
    quiver.validate_spec(spec)
    return spec


def _messages(error):
    if isinstance(error, ValidationError):
        return '; '.join(error.messages)
    return str(error)


class QuiverLabCommand(BaseCommand):
    """A command of the form ``<name> <verb> <spec> [options]``."""
    verbs = ()
    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super(QuiverLabCommand, self).create_parser(
            prog_name, subcommand, **kwargs
        )
        if getattr(self, '_called_from_command_line', False):
            def error(message):
                """Exit with the input error code on bad arguments."""
                parser.print_usage(sys.stderr)
                parser.exit(INPUT_ERROR, '{}: error: {}\n'.format(
                    parser.prog, message
                ))
            parser.error = error
        return parser

    def add_arguments(self, parser):
        parser.add_argument('verb', help=', '.join(self.verbs))
        parser.add_argument('spec', help='algebra spec file, JSON or YAML')
        for flag, dest, kind, text in (
                ('--field-prime', 'field_prime', int, 'order of the field'),
                ('--dim-bound', 'dim_bound', int,
                 'largest dimension at a vertex of an enumerated module'),
                ('--budget', 'budget', int,
                 'candidates examined while enumerating'),
                ('--mult-bound', 'mult_bound', int,
                 'largest multiplicity inside a composite object'),
                ('--hom-cap', 'hom_cap', int, 'morphism classes enumerated'),
                ('--ext-cap', 'ext_cap', int, 'extension classes enumerated'),
                ('--tower-depth', 'tower_depth', int,
                 'layers built for a cone or cocone tower'),
                ('--seed', 'seed', int, 'seed for randomized steps'),
                ('--output', 'output', str, 'json or table'),
                ('--cache-dir', 'cache_dir', str,
                 'catalog cache directory; empty to disable')):
            parser.add_argument(flag, dest=dest, type=kind, default=None,
                                help=text)
        self.add_verb_arguments(parser)

    def add_verb_arguments(self, parser):
        """Add the options specific to this command."""

    def handle(self, *args, **options):
        """Run the verb, write its report and turn the outcome into an exit
        code."""
        try:
            if options['verb'] not in self.verbs:
                raise ValidationError('Unknown verb {}; expected one of {}.'.format(
                    options['verb'], ', '.join(self.verbs)
                ))
            spec = load_spec(options['spec'])
            self.options = self.run_options(spec, options)
            self.spec = spec
            self.algebra = quiver.parse_algebra(
                spec, self.options['field_prime']
            )
            report = getattr(self, 'do_' + options['verb'])(**options)
        except ValidationError as error:
            raise CommandError(_messages(error), returncode=INPUT_ERROR)
        except QuiverLabError as error:
            raise CommandError(_messages(error), returncode=error.returncode)
        report.meta = self.report_meta()
        self.stdout.write(
            report_emit(report, self.options['output']).decode('utf-8'),
            ending='',
        )
        if report.status == FAIL:
            raise CommandError('A check failed; see the report.',
                               returncode=CHECK_FAILED)
        if report.status == UNVERIFIED:
            raise CommandError('Some checks could not be decided.',
                               returncode=UNDECIDED)

    def run_options(self, spec, options):
        """Validate the global flags, falling back to the settings."""
        data = option_defaults()
        if 'prime' in spec:
            data['field_prime'] = spec['prime']
        for name in data:
            if options.get(name) is not None:
                data[name] = options[name]
        form = RunOptionsForm(data)
        if not form.is_valid():
            raise ValidationError('; '.join(
                '{}: {}'.format(name, ' '.join(errors))
                for name, errors in sorted(form.errors.items())
            ))
        self.bounds = form.search_bounds()
        return form.cleaned_data

    def report_meta(self):
        """Return the run parameters embedded in every report."""
        bounds = self.bounds.as_dict()
        bounds['dim_bound'] = self.options['dim_bound']
        bounds['budget'] = self.options['budget']
        return {
            'seed': self.options['seed'],
            'prime': self.algebra.prime,
            'bounds': bounds,
            'algebra': {
                'hash': self.algebra.digest,
                'dimension': self.algebra.dimension,
                'vertices': list(self.algebra.vertices),
            },
        }

    # catalogs and contexts

    def catalog_of(self, algebra):
        """Return the catalog of ``algebra``, through the cache."""
        options = self.options
        return cache.cached_catalog(
            options['cache_dir'], algebra, options['dim_bound'],
            options['budget'], options['seed'], options['trials'],
        )

    def triangular_context(self, algebra=None):
        """Return the recollement for the triangular algebra over
        ``algebra``, the command's algebra by default."""
        algebra = algebra or self.algebra
        algebra_b = quiver.parse_algebra(
            quiver.triangular_spec(algebra.spec), algebra.prime
        )
        return recollement.context_from_catalogs(
            self.catalog_of(algebra), self.catalog_of(algebra_b)
        )

    def catalog(self):
        """Return the catalog of the command's algebra.

        A ``triangular`` spec gets its items labelled by triples.

        """
        if 'triangular' in self.spec:
            inner = dict(self.spec['triangular'])
            algebra = quiver.parse_algebra(inner, self.algebra.prime)
            ctx = recollement.context_from_catalogs(
                self.catalog_of(algebra), self.catalog_of(self.algebra)
            )
            return ctx.b.catalog
        return self.catalog_of(self.algebra)

    def context(self):
        """Return the full module category of the command's algebra."""
        return subcat.CategoryContext(self.catalog(), ext_cap=self.bounds.ext_cap)


def select(context, selectors):
    """Return the subcategory of ``context`` named by ``selectors``."""
    return subcat.Subcategory(
        context, [context.catalog.select(selector) for selector in selectors]
    )
