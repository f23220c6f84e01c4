"""Create a command named ``bijection``."""
from quiverlab import thickmaps
from quiverlab.management.commands._base import QuiverLabCommand


class Command(QuiverLabCommand):
    """Defines how to register the ``bijection`` command with ``manage.py``."""
    help = ('bijection verify <specA>: match the thick subcategories of the '
            'triangular algebra containing i_* mod A with those of mod A.')
    verbs = ('verify',)

    def do_verify(self, **options):  # pylint: disable=W0613
        """Enumerate both sides and check the two maps are inverse."""
        return thickmaps.verify_bijection(self.triangular_context(),
                                          self.bounds)
