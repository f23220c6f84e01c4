"""Create a command named ``indec``."""
from quiverlab.management.commands._base import QuiverLabCommand
from quiverlab.reports import Report


class Command(QuiverLabCommand):
    """Defines how to register the ``indec`` command with ``manage.py``."""
    help = 'indec enumerate <spec>: list the indecomposable modules.'
    verbs = ('enumerate',)

    def do_enumerate(self, **options):  # pylint: disable=W0613
        """Enumerate the catalog, or read it back from the cache."""
        catalog = self.catalog()
        return Report('indec enumerate', count=len(catalog), items=[
            {'index': i, 'label': label, 'dims': list(item.dims)}
            for i, (label, item) in enumerate(zip(catalog.labels,
                                                  catalog.items))
        ])
