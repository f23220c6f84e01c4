"""Factory Boy factory definitions and example objects for the tests.

Two algebras recur everywhere: ``kA2``, the path algebra of ``1 -> 2``, and
its triangular matrix algebra, the commutative square. Building their catalogs
takes a while, so the helpers below are memoized per process; the objects they
return are immutable.

The fuzzy helpers draw from ``factory.random``, so a test that calls
``factory.random.reseed_random`` first gets the same data on every run.

"""
import functools

import factory
from factory import DictFactory, LazyAttribute, LazyFunction, SubFactory
from factory.fuzzy import FuzzyInteger

from quiverlab import quiver, recollement, rep, subcat

A2_SPEC = {
    'vertices': ['1', '2'],
    'arrows': [{'name': 'a', 'from': '1', 'to': '2'}],
    'relations': [],
}

# The commutative square with the relation ``y.a f.2 = f.1 x.a`` written out,
# which is what ``{"triangular": A2_SPEC}`` expands to.
SQUARE_SPEC = quiver.triangular_spec(A2_SPEC)

POINT_SPEC = {'vertices': ['1']}


class AlgebraSpecFactory(DictFactory):
    """Build the spec of a linearly oriented quiver of type ``A``.

    >>> spec = AlgebraSpecFactory(length=3)
    >>> spec['vertices']
    ['1', '2', '3']
    >>> [arrow['name'] for arrow in spec['arrows']]
    ['a1', 'a2']
    >>> quiver.validate_spec(AlgebraSpecFactory())

    """
    # pylint: disable=R0903
    # pylint: disable=W0232
    vertices = LazyAttribute(
        lambda o: [str(i) for i in range(1, o.length + 1)]
    )
    arrows = LazyAttribute(lambda o: [
        {'name': 'a{}'.format(i), 'from': str(i), 'to': str(i + 1)}
        for i in range(1, o.length)
    ])
    relations = LazyFunction(list)

    class Params(object):
        """Values that shape the spec without being part of it."""
        length = FuzzyInteger(1, 3)


class AlgebraFactory(factory.Factory):
    """Build a ``quiverlab.quiver.Algebra`` from a spec.

    >>> AlgebraFactory(spec=A2_SPEC).dimension
    3
    >>> AlgebraFactory(spec=POINT_SPEC, prime=7).prime
    7

    """
    # pylint: disable=R0903
    # pylint: disable=W0232
    spec = SubFactory(AlgebraSpecFactory)
    prime = None

    class Meta(object):
        """Non-field information about this factory."""
        model = quiver.Algebra

    @classmethod
    def _build(cls, model_class, *args, **kwargs):
        return quiver.parse_algebra(kwargs['spec'], kwargs['prime'])

    @classmethod
    def _create(cls, model_class, *args, **kwargs):
        return cls._build(model_class, *args, **kwargs)


@functools.lru_cache(maxsize=None)
def a2_algebra():
    """Return ``kA2`` over the default field."""
    return quiver.parse_algebra(A2_SPEC)


@functools.lru_cache(maxsize=None)
def square_algebra():
    """Return the commutative square, the triangular algebra of ``kA2``."""
    return quiver.parse_algebra({'triangular': A2_SPEC})


@functools.lru_cache(maxsize=None)
def a2_catalog():
    """Return the catalog of ``kA2``: ``S2``, ``S1`` and ``P1``."""
    return rep.enumerate_indecomposables(a2_algebra())


@functools.lru_cache(maxsize=None)
def square_catalog():
    """Return the catalog of the commutative square with default labels."""
    return rep.enumerate_indecomposables(square_algebra())


def a2_module(label):
    """Return the ``kA2`` catalog item labelled ``label``.

    >>> a2_module('P1').dims
    (1, 1)

    """
    catalog = a2_catalog()
    return catalog.items[catalog.index_of(label)]


@functools.lru_cache(maxsize=None)
def a2_context():
    """Return ``mod kA2`` as a full ``CategoryContext``."""
    return subcat.CategoryContext(a2_catalog())


@functools.lru_cache(maxsize=None)
def a2_recollement():
    """Return the recollement ``(mod kA2, mod B, mod kA2)``.

    >>> ctx = a2_recollement()
    >>> len(ctx.b.items)
    11
    >>> ctx.b.label(ctx.b.catalog.index_of('(S1,P1)_f'))
    '(S1,P1)_f'

    """
    return recollement.triangular_context(
        a2_algebra(), catalog=a2_catalog(), b_catalog=square_catalog()
    )


def b_module(label):
    """Return the item of the triangular catalog labelled ``label``."""
    catalog = a2_recollement().b.catalog
    return catalog.items[catalog.index_of(label)]


def b_subcategory(*labels):
    """Return the subcategory of ``mod B`` with members ``labels``."""
    context = a2_recollement().b
    return subcat.Subcategory(
        context, [context.catalog.index_of(label) for label in labels]
    )


def a2_subcategory(*labels):
    """Return the subcategory of ``mod kA2`` with members ``labels``, inside
    the ``a`` side of ``a2_recollement``."""
    context = a2_recollement().a
    return subcat.Subcategory(
        context, [context.catalog.index_of(label) for label in labels]
    )


def fuzzy_matrix(field, rows, cols):
    """Return a random ``rows x cols`` matrix over ``field``.

    >>> from quiverlab.exactlin import PrimeField
    >>> fuzzy_matrix(PrimeField(7), 2, 3).shape
    (2, 3)

    """
    entry = FuzzyInteger(0, field.prime - 1)
    return field.matrix(
        [[entry.fuzz() for _ in range(cols)] for _ in range(rows)],
        shape=(rows, cols),
    )


def fuzzy_subset(indices, low=0, high=None):
    """Return a random sorted subset of ``indices``.

    The size is drawn between ``low`` and ``high`` (default: all of them).

    >>> subset = fuzzy_subset(range(5), 1, 3)
    >>> 1 <= len(subset) <= 3 and set(subset) <= set(range(5))
    True

    """
    indices = sorted(indices)
    if high is None:
        high = len(indices)
    size = FuzzyInteger(low, high).fuzz()
    return sorted(factory.random.randgen.sample(indices, size))
