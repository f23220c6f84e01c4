"""Collect this app's doctests into a single suite.

The unit tests in the ``test_*`` modules are found by the test runner as usual.
For details on testing with Django, see:
https://docs.djangoproject.com/en/4.2/topics/testing/overview/

"""
from doctest import DocTestSuite

from quiverlab import (
    cache,
    exactlin,
    factories,
    forms,
    homology,
    quiver,
    recollement,
    rep,
    reports,
    silting,
    subcat,
    tables,
    thickmaps,
)


def load_tests(loader, tests, ignore): # pylint: disable=W0613
    """Create a suite of doctests from this Django application."""
    for module in (exactlin, quiver, rep, homology, subcat, reports,
                   recollement, thickmaps, silting, cache, tables, forms,
                   factories):
        tests.addTests(DocTestSuite(module))
    return tests
