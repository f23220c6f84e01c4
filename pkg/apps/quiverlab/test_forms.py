"""Unit tests for the ``forms`` module."""
from django.test import SimpleTestCase, override_settings

from quiverlab.forms import RunOptionsForm, option_defaults

# pylint: disable=R0904
# Classes inheriting from TestCase will have 60+ too many public methods, and
# that's not something I have control over. Ignore it.


class RunOptionsFormTestCase(SimpleTestCase):
    """Tests for ``RunOptionsForm``."""

    def test_defaults_valid(self):
        """The settings give a valid set of options."""
        self.assertTrue(RunOptionsForm(option_defaults()).is_valid())

    @override_settings(FIELD_PRIME=7, TOWER_DEPTH=3)
    def test_settings_override(self):
        """Defaults follow the settings."""
        form = RunOptionsForm(option_defaults())
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data['field_prime'], 7)
        self.assertEqual(form.search_bounds().tower_depth, 3)

    def test_invalid_values(self):
        """Composite primes, zero bounds and unknown formats are rejected."""
        for name, value in (('field_prime', 91), ('field_prime', 1),
                            ('dim_bound', 0), ('mult_bound', 0),
                            ('trials', 0), ('seed', -1), ('output', 'xml'),
                            ('budget', 'many')):
            form = RunOptionsForm(dict(option_defaults(), **{name: value}))
            self.assertFalse(form.is_valid(), name)
            self.assertIn(name, form.errors)

    def test_cache_dir_optional(self):
        """The cache directory may be left empty."""
        form = RunOptionsForm(dict(option_defaults(), cache_dir=''))
        self.assertTrue(form.is_valid())
        self.assertEqual(form.cleaned_data['cache_dir'], '')

    def test_search_bounds(self):
        """The bounds are read from the cleaned options."""
        form = RunOptionsForm(dict(option_defaults(), mult_bound=3,
                                   hom_cap=10, ext_cap=20))
        self.assertTrue(form.is_valid())
        bounds = form.search_bounds()
        self.assertEqual((bounds.sum_mult, bounds.hom_enum_cap,
                          bounds.ext_cap), (3, 10, 20))
