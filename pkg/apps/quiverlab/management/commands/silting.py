"""Create a command named ``silting``."""
from quiverlab import silting
from quiverlab.management.commands._base import QuiverLabCommand, select
from quiverlab.reports import Report


class Command(QuiverLabCommand):
    """Defines how to register the ``silting`` command with ``manage.py``."""
    help = ('silting check <spec> --gens ...: check a silting subcategory and '
            'its cotorsion pair. silting glue <specA> --ma ... --mc ...: glue '
            'two silting subcategories of mod A. silting restrict <specA> '
            '--m ...: restrict one of the triangular algebra.')
    verbs = ('check', 'glue', 'restrict')

    def add_verb_arguments(self, parser):
        parser.add_argument('--gens', nargs='*', default=[],
                            help='selectors of M, for check')
        parser.add_argument('--ma', nargs='*', default=[],
                            help='selectors of M_A, for glue')
        parser.add_argument('--mc', nargs='*', default=[],
                            help='selectors of M_C, for glue')
        parser.add_argument('--m', nargs='*', default=[],
                            help='selectors of M in the triangular algebra, '
                                 'for restrict')

    def do_check(self, **options):
        """Check that ``--gens`` is silting and that its pair is a bounded
        hereditary cotorsion pair."""
        subcategory = select(self.context(), options['gens'])
        verdict = silting.is_silting(subcategory, self.bounds)
        if not verdict.passed:
            report = Report('silting check', M=subcategory.labels())
            report.add('silting', False, verdict.witness)
            return report
        return silting.at_bijection_check(subcategory, self.bounds)

    def do_glue(self, **options):
        """Glue ``--ma`` and ``--mc``."""
        ctx = self.triangular_context()
        return silting.glue_silting(
            ctx, select(ctx.a, options['ma']), select(ctx.c, options['mc']),
            self.bounds,
        )[1]

    def do_restrict(self, **options):
        """Restrict ``--m`` to both sides."""
        ctx = self.triangular_context()
        return silting.restrict_silting(ctx, select(ctx.b, options['m']),
                                        self.bounds)[2]
