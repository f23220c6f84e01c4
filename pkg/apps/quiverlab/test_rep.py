"""Unit tests for the ``rep`` module."""
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from quiverlab import factories, quiver, rep
from quiverlab.exceptions import (
    BoundsExceeded,
    CatalogMiss,
    PreconditionError,
)

# pylint: disable=R0904
# Classes inheriting from TestCase will have 60+ too many public methods, and
# that's not something I have control over. Ignore it.

SQUARE_LABELS = [
    '(0,P1)', '(0,S1)', '(0,S2)', '(P1,0)', '(P1,P1)_1', '(P1,S2)_f',
    '(S1,0)', '(S1,P1)_f', '(S1,S1)_1', '(S2,0)', '(S2,S2)_1',
]


class RepresentationTestCase(SimpleTestCase):
    """Tests for ``Representation``."""

    def setUp(self):
        """Pick the commutative square."""
        self.algebra = factories.square_algebra()

    def test_relations_checked(self):
        """A module breaking the commutativity relation is rejected."""
        ones = {name: [[1]] for name in ('x.a', 'y.a', 'f.1', 'f.2')}
        rep.Representation(self.algebra, [1, 1, 1, 1], ones)
        with self.assertRaises(ValidationError):
            rep.Representation(self.algebra, [1, 1, 1, 1],
                               dict(ones, **{'f.2': [[2]]}))

    def test_shapes_checked(self):
        """Matrices must match the dimensions at their ends."""
        with self.assertRaises(ValidationError):
            rep.Representation(factories.a2_algebra(), [1, 1], {'a': [[1, 0]]})
        with self.assertRaises(ValidationError):
            rep.Representation(factories.a2_algebra(), [1], {})
        with self.assertRaises(ValidationError):
            rep.Representation(factories.a2_algebra(), [1, 1], {'b': [[1]]})

    def test_missing_arrows_are_zero(self):
        """Arrows left out act by zero."""
        module = rep.Representation(factories.a2_algebra(), [1, 1], {})
        self.assertEqual(module.mat('a').tolist(), [[0]])

    def test_equality(self):
        """Modules compare by their data."""
        first = rep.Representation(factories.a2_algebra(), [1, 1], {'a': [[1]]})
        second = rep.Representation(factories.a2_algebra(), [1, 1],
                                    {'a': [[1]]})
        self.assertEqual(first, second)
        self.assertEqual(hash(first), hash(second))
        self.assertNotEqual(first, rep.Representation(
            factories.a2_algebra(), [1, 1], {'a': [[2]]}
        ))


class MorphismTestCase(SimpleTestCase):
    """Tests for ``Morphism`` and the kernel and cokernel builders."""

    def setUp(self):
        """Fetch the three ``kA2`` indecomposables."""
        self.s1 = factories.a2_module('S1')
        self.s2 = factories.a2_module('S2')
        self.p1 = factories.a2_module('P1')

    def test_intertwining_checked(self):
        """``S2 -> P1`` must land in the socle."""
        rep.Morphism(self.s2, self.p1, [None, [[1]]])
        with self.assertRaises(ValidationError):
            rep.Morphism(self.p1, self.s2, [None, [[1]]])

    def test_hom_dimensions(self):
        """Hom spaces between the ``kA2`` indecomposables."""
        expected = {
            ('S2', 'S2'): 1, ('S2', 'S1'): 0, ('S2', 'P1'): 1,
            ('S1', 'S2'): 0, ('S1', 'S1'): 1, ('S1', 'P1'): 0,
            ('P1', 'S2'): 0, ('P1', 'S1'): 1, ('P1', 'P1'): 1,
        }
        for (x, y), dim in expected.items():
            self.assertEqual(rep.hom_dim(factories.a2_module(x),
                                         factories.a2_module(y)), dim)

    def test_kernel_and_cokernel(self):
        """``0 -> S2 -> P1 -> S1 -> 0``."""
        (inclusion,) = rep.hom_basis(self.s2, self.p1)
        cokernel, projection = rep.cokernel(inclusion)
        self.assertEqual(cokernel.dims, (1, 0))
        self.assertTrue(projection.compose(inclusion).is_zero())
        kernel, included = rep.kernel(projection)
        self.assertEqual(kernel.dims, (0, 1))
        self.assertTrue(included.is_injective())

    def test_compose_checks_ends(self):
        """Only composable morphisms compose."""
        (f,) = rep.hom_basis(self.s2, self.p1)
        with self.assertRaises(ValidationError):
            f.compose(f)

    def test_descend_and_lift(self):
        """Maps factor through cokernels and kernels."""
        (inclusion,) = rep.hom_basis(self.s2, self.p1)
        (epi,) = rep.hom_basis(self.p1, self.s1)
        _, projection = rep.cokernel(inclusion)
        induced = rep.descend(projection, epi)
        self.assertEqual(induced.compose(projection), epi)
        _, included = rep.kernel(epi)
        lifted = rep.lift(included, inclusion)
        self.assertEqual(included.compose(lifted), inclusion)
        with self.assertRaises(ValidationError):
            rep.lift(included, rep.Morphism.identity(self.p1))

    def test_linear_combination(self):
        """Combinations of a Hom basis stay morphisms."""
        (f,) = rep.hom_basis(self.s2, self.p1)
        combination = rep.linear_combination([2, 3], [f, f])
        self.assertEqual(combination, f.scale(5))
        self.assertTrue(rep.linear_combination(
            [], [], source=self.s2, target=self.p1
        ).is_zero())


class DecompositionTestCase(SimpleTestCase):
    """Tests for ``is_indecomposable``, ``are_isomorphic`` and
    ``decompose``."""

    def test_indecomposables(self):
        """Simples and projectives are indecomposable; sums are not."""
        algebra = factories.square_algebra()
        for vertex in algebra.vertices:
            self.assertTrue(rep.is_indecomposable(
                quiver.projective_module(algebra, vertex)
            ))
        self.assertFalse(rep.is_indecomposable(quiver.regular_module(algebra)))

    def test_zero_module(self):
        """The zero module is not a valid question."""
        with self.assertRaises(PreconditionError):
            rep.is_indecomposable(rep.zero_module(factories.a2_algebra()))

    def test_isomorphic_sums(self):
        """Sums in different orders are isomorphic."""
        s1, s2 = factories.a2_module('S1'), factories.a2_module('S2')
        self.assertTrue(rep.are_isomorphic(rep.direct_sum(s1, s2),
                                           rep.direct_sum(s2, s1)))
        self.assertFalse(rep.are_isomorphic(rep.direct_sum(s1, s2),
                                            factories.a2_module('P1')))

    def test_decompose_regular(self):
        """The regular module of the square is the sum of its projectives."""
        ctx = factories.a2_recollement()
        catalog = ctx.b.catalog
        found = catalog.names(rep.decompose(
            quiver.regular_module(catalog.algebra), catalog
        ))
        self.assertEqual(sorted(found),
                         ['(P1,0)', '(P1,P1)_1', '(S2,0)', '(S2,S2)_1'])

    def test_decompose_multiplicities(self):
        """Repeated summands are listed repeatedly."""
        catalog = factories.a2_catalog()
        s1 = factories.a2_module('S1')
        module = rep.direct_sum(s1, factories.a2_module('P1'), s1)
        self.assertEqual(catalog.names(catalog.decompose(module)),
                         ['S1', 'S1', 'P1'])

    def test_catalog_miss(self):
        """Summands beyond the dimension bound are reported."""
        kronecker = quiver.parse_algebra({
            'vertices': ['1', '2'],
            'arrows': [{'name': 'a', 'from': '1', 'to': '2'},
                       {'name': 'b', 'from': '1', 'to': '2'}],
        }, prime=5)
        catalog = rep.enumerate_indecomposables(kronecker, dim_bound=1)
        self.assertEqual(sorted(item.dims for item in catalog.items),
                         [(0, 1)] + [(1, 0)] + [(1, 1)] * 6)
        with self.assertRaises(CatalogMiss):
            catalog.decompose(quiver.projective_module(kronecker, '1'))

class EnumerateTestCase(SimpleTestCase):
    """Tests for ``enumerate_indecomposables``."""

    def test_a2(self):
        """``kA2`` has three indecomposables."""
        catalog = factories.a2_catalog()
        self.assertEqual([item.dims for item in catalog.items],
                         [(0, 1), (1, 0), (1, 1)])
        self.assertEqual(list(catalog.labels), ['S2', 'S1', 'P1'])

    def test_square(self):
        """The commutative square has eleven, labelled by triples."""
        catalog = factories.a2_recollement().b.catalog
        self.assertEqual(len(catalog), 11)
        self.assertEqual(sorted(catalog.labels), SQUARE_LABELS)

    def test_linear_a3(self):
        """A linear ``A3`` quiver has six indecomposables, one per interval."""
        algebra = factories.AlgebraFactory(
            spec=factories.AlgebraSpecFactory(length=3)
        )
        catalog = rep.enumerate_indecomposables(algebra)
        self.assertEqual(len(catalog), 6)
        for item in catalog.items:
            support = [i for i, dim in enumerate(item.dims) if dim]
            self.assertEqual(support, list(range(support[0], support[-1] + 1)))
            self.assertTrue(all(dim <= 1 for dim in item.dims))

    def test_point(self):
        """The ground field has one indecomposable."""
        catalog = rep.enumerate_indecomposables(
            quiver.parse_algebra(factories.POINT_SPEC)
        )
        self.assertEqual(list(catalog.labels), ['S1'])

    def test_select(self):
        """Selectors are labels or dimension vectors."""
        catalog = factories.a2_catalog()
        self.assertEqual(catalog.select('P1'), 2)
        self.assertEqual(catalog.select('1,0'), 1)
        for selector in ('Q7', '1,1,1', 'x'):
            with self.assertRaises(ValidationError):
                catalog.select(selector)

    def test_budget(self):
        """A tiny budget is exceeded."""
        with self.assertRaises(BoundsExceeded):
            rep.enumerate_indecomposables(factories.square_algebra(),
                                          budget=1)
