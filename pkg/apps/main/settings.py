"""Global settings for this Django project.

For a gentle introduction to Django's settings, read `Django settings`_. For a
more thorough reference, read the `settings reference`_. To see the differences
between this settings file and the defaults, run ``manage.py diffsettings``.

Django-specific settings come first. The ``QUIVERLAB`` block at the bottom holds
the defaults used by the ``quiverlab`` management commands. Each of those can be
overridden for a single run with the matching command-line flag, e.g.
``--field-prime`` overrides ``FIELD_PRIME``.

.. _settings reference: https://docs.djangoproject.com/en/dev/ref/settings/
.. _Django settings: https://docs.djangoproject.com/en/dev/topics/settings/

"""
import os

# Turning this on raises the ``quiverlab`` logger to DEBUG, which reports every
# table entry and every cache lookup. Noisy, but useful when a closure looks
# wrong.
DEBUG = False

# Nothing here is served over HTTP, but Django refuses to start some commands
# without a key. Provide your own if you ever wire up a web front end.
SECRET_KEY = 'quiverlab-local-only'

# The commands never touch a database. An empty dict makes Django fall back to
# its dummy backend.
DATABASES = {}

# If you set this to False, Django will make some optimizations so as not
# to load the internationalization machinery.
USE_I18N = False

# If you set this to False, Django will not use timezone-aware datetimes.
USE_TZ = True

INSTALLED_APPS = (
    'django_tables2',
    'quiverlab',
)

# Logging: http://docs.djangoproject.com/en/dev/topics/logging
#
# Reports go to stdout through the management commands. The log is for progress
# messages only, and it goes to stderr.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'quiverlab': {
            'handlers': ['console'],
            'level': 'DEBUG' if DEBUG else 'INFO',
            'propagate': False,
        },
    },
}

# -----------------------------------------------------------------------------
# QUIVERLAB
# -----------------------------------------------------------------------------

# Order of the prime field all linear algebra happens over. Must exceed every
# vector space dimension that shows up in a computation.
FIELD_PRIME = 101

# Largest dimension, at any single vertex, of an enumerated indecomposable.
DIM_BOUND = 4

# Maximum number of candidate extensions examined while enumerating
# indecomposables.
ENUMERATION_BUDGET = 10 ** 7

# Maximum multiplicity of one indecomposable inside a composite object used by
# the closure predicates.
SUM_MULT = 2

# Maximum number of morphism classes enumerated while building cone and cocone
# tables.
HOM_ENUM_CAP = 10 ** 5

# Maximum number of extension classes enumerated per computation.
EXT_CAP = 10 ** 4

# Maximum number of layers built for a cone or cocone tower.
TOWER_DEPTH = 8

# Seed for every randomized step. It is recorded in every report.
RANDOM_SEED = 42

# Random trials spent on an isomorphism or decomposition question before giving
# up and reporting it as ambiguous.
ISO_TRIALS = 32

# Enumerated catalogs are cached here, one YAML file per algebra and bounds.
# Don't put anything in this directory yourself, and don't version control it.
CATALOG_CACHE_DIR = os.path.abspath(os.path.join(
    os.path.dirname(__file__),
    '..',
    '..',
    'cache',
))

# Default report format, ``json`` or ``table``.
REPORT_FORMAT = 'json'
