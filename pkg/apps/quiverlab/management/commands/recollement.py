"""Create a command named ``recollement``."""
from quiverlab import recollement
from quiverlab.management.commands._base import QuiverLabCommand, select


class Command(QuiverLabCommand):
    """Defines how to register the ``recollement`` command with
    ``manage.py``."""
    help = ('recollement verify <specA> [--restrict ... --require thick|'
            'extension]: check the recollement axioms for the triangular '
            'algebra over A, or for its restriction to a subcategory.')
    verbs = ('verify',)

    def add_verb_arguments(self, parser):
        parser.add_argument('--restrict', nargs='*', default=None,
                            help='selectors of the middle subcategory')
        parser.add_argument('--require', default=recollement.THICK,
                            help='closure demanded of the middle '
                                 'subcategory: thick or extension')

    def do_verify(self, **options):
        """Verify the axioms and the functor identities."""
        ctx = self.triangular_context()
        restricted = None
        if options['restrict'] is not None:
            middle = select(ctx.b, options['restrict'])
            ctx = recollement.restricted_context(ctx, middle,
                                                 options['require'],
                                                 self.bounds)
            restricted = {
                'V': middle.labels(),
                'C': ctx.c.whole().labels(),
                'require': options['require'],
            }
        report = recollement.verify_recollement(ctx)
        if restricted is not None:
            report.payload['restricted'] = restricted
        return report
