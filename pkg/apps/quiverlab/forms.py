"""Forms for validating command-line options.

The management commands collect their global flags into a dict and bind it to
``RunOptionsForm``. Flags left out fall back to the ``QUIVERLAB`` settings.

"""
from django.conf import settings
from django.forms import CharField, ChoiceField, Form, IntegerField

from quiverlab.exactlin import validate_prime
from quiverlab.reports import OUTPUT_FORMATS
from quiverlab.subcat import SearchBounds

# pylint: disable=R0903
# "Too few public methods (0/2)"
# It is both common and OK for a form to have no methods.
#
# pylint: disable=W0232
# "Class has no __init__ method"
# It is both common and OK for a form to have no __init__ method.


def option_defaults():
    """Return the option values taken from the settings.

    >>> option_defaults()['field_prime']
    101

    """
    return {
        'field_prime': settings.FIELD_PRIME,
        'dim_bound': settings.DIM_BOUND,
        'budget': settings.ENUMERATION_BUDGET,
        'mult_bound': settings.SUM_MULT,
        'hom_cap': settings.HOM_ENUM_CAP,
        'ext_cap': settings.EXT_CAP,
        'tower_depth': settings.TOWER_DEPTH,
        'seed': settings.RANDOM_SEED,
        'trials': settings.ISO_TRIALS,
        'output': settings.REPORT_FORMAT,
        'cache_dir': settings.CATALOG_CACHE_DIR,
    }


class RunOptionsForm(Form):
    """The global options shared by every command.

    >>> form = RunOptionsForm(dict(option_defaults(), field_prime=100))
    >>> form.is_valid(), list(form.errors)
    (False, ['field_prime'])
    >>> form = RunOptionsForm(option_defaults())
    >>> form.is_valid()
    True
    >>> form.search_bounds().sum_mult
    2

    """
    field_prime = IntegerField(min_value=2, validators=[validate_prime])
    dim_bound = IntegerField(min_value=1)
    budget = IntegerField(min_value=1)
    mult_bound = IntegerField(min_value=1)
    hom_cap = IntegerField(min_value=1)
    ext_cap = IntegerField(min_value=1)
    tower_depth = IntegerField(min_value=1)
    seed = IntegerField(min_value=0)
    trials = IntegerField(min_value=1)
    output = ChoiceField(choices=[(name, name) for name in OUTPUT_FORMATS])
    # An empty value turns the catalog cache off.
    cache_dir = CharField(required=False)

    class Meta(object):
        """Form attributes that are not fields."""
        fields = ['field_prime', 'dim_bound', 'budget', 'mult_bound',
                  'hom_cap', 'ext_cap', 'tower_depth', 'seed', 'trials',
                  'output', 'cache_dir']

    def search_bounds(self):
        """Return the ``SearchBounds`` given by the cleaned options."""
        data = self.cleaned_data
        return SearchBounds(
            sum_mult=data['mult_bound'],
            hom_enum_cap=data['hom_cap'],
            tower_depth=data['tower_depth'],
            ext_cap=data['ext_cap'],
        )
