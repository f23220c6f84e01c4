"""Create a command named ``thick``."""
from quiverlab import subcat
from quiverlab.management.commands._base import QuiverLabCommand, select
from quiverlab.reports import Report


class Command(QuiverLabCommand):
    """Defines how to register the ``thick`` command with ``manage.py``."""
    help = ('thick enumerate <spec> [--contains ...]: list the thick '
            'subcategories. thick closure <spec> --gens ...: compute one '
            'thick closure.')
    verbs = ('enumerate', 'closure')

    def add_verb_arguments(self, parser):
        parser.add_argument('--contains', nargs='*', default=[],
                            help='selectors every listed subcategory contains')
        parser.add_argument('--gens', nargs='*', default=[],
                            help='selectors of the generators')

    def do_enumerate(self, **options):
        """List every thick subcategory containing ``--contains``."""
        context = self.context()
        required = select(context, options['contains'])
        found = subcat.enumerate_thick(context, self.bounds,
                                       require_contains=required)
        report = Report('thick enumerate', count=len(found), subcategories=[
            subcategory.labels() for subcategory in found
        ])
        report.payload['contains'] = required.labels()
        offenders = [subcategory.labels() for subcategory in found
                     if not subcat.is_thick(subcategory, self.bounds).passed]
        report.add('all_thick', not offenders,
                   {'subcategory': offenders[0]} if offenders else None)
        return report

    def do_closure(self, **options):
        """Compute ``thick(--gens)`` and how it was reached."""
        context = self.context()
        generators = select(context, options['gens'])
        closure, trace = subcat.closure_trace(generators, self.bounds)
        report = Report('thick closure', generators=generators.labels(),
                        closure=closure.labels(), trace=trace)
        verdict = subcat.is_thick(closure, self.bounds)
        report.add('thick', verdict.passed, None if verdict.passed else {
            name: check.witness for name, check in verdict.witness.items()
            if not check.passed
        })
        return report
