"""Unit tests for the ``subcat`` module.

The closure laws are checked on random subsets drawn from ``factory.random``
after reseeding, over both ``mod kA2`` and the module category of the
commutative square.

"""
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
import factory.random

from quiverlab import factories, rep, subcat
from quiverlab.exceptions import PreconditionError

# pylint: disable=R0904
# Classes inheriting from TestCase will have 60+ too many public methods, and
# that's not something I have control over. Ignore it.

# Random subsets per context for the closure laws.
SAMPLES = 500

# The members of ``ker j^*`` inside the triangular catalog.
TOP_ROW = ('(S2,0)', '(S1,0)', '(P1,0)')


def contexts():
    """Return the two full contexts under test."""
    return (factories.a2_context(), factories.a2_recollement().b)


class SubcategoryTestCase(SimpleTestCase):
    """Tests for ``Subcategory`` and ``add_closure``."""

    def setUp(self):
        """Pick ``mod kA2``."""
        self.context = factories.a2_context()

    def test_set_operations(self):
        """Meets, joins and inclusions act on members."""
        first = subcat.Subcategory(self.context, [0, 1])
        second = subcat.Subcategory(self.context, [1, 2])
        self.assertEqual((first & second).labels(), ['S1'])
        self.assertEqual((first | second).labels(), ['S2', 'S1', 'P1'])
        self.assertTrue(first & second <= first)
        self.assertFalse(first <= second)
        self.assertEqual(list(second), [1, 2])

    def test_outside_universe(self):
        """Members must lie in the universe."""
        with self.assertRaises(PreconditionError):
            subcat.Subcategory(self.context, [3])

    def test_add_closure_of_sum(self):
        """``add`` of a sum holds its summands."""
        module = rep.direct_sum(factories.a2_module('P1'),
                                factories.a2_module('S2'))
        closure = subcat.add_closure(self.context, [module])
        self.assertEqual(closure.labels(), ['S2', 'P1'])
        self.assertTrue(closure.contains_module(module))
        self.assertFalse(closure.contains_module(factories.a2_module('S1')))

    def test_generator(self):
        """The generator of ``add`` is the sum of its members."""
        self.assertTrue(self.context.zero().generator().is_zero())
        self.assertEqual(self.context.whole().generator().dims, (2, 2))

    def test_search_bounds(self):
        """Bounds must be positive."""
        self.assertEqual(subcat.SearchBounds(tower_depth=3).tower_depth, 3)
        with self.assertRaises(ValidationError):
            subcat.SearchBounds(ext_cap=0)

    def test_unknown_mode(self):
        """Only full and extension closed contexts exist."""
        with self.assertRaises(ValidationError):
            subcat.CategoryContext(factories.a2_catalog(), mode='exact')


class PredicateTestCase(SimpleTestCase):
    """Tests for the closure predicates."""

    def setUp(self):
        """Pick ``mod kA2``."""
        self.context = factories.a2_context()

    def subcategory(self, *labels):
        """Return the ``kA2`` subcategory with members ``labels``."""
        return subcat.Subcategory(
            self.context,
            [self.context.catalog.index_of(label) for label in labels],
        )

    def test_simples_not_extension_closed(self):
        """``S2 -> P1 -> S1`` leaves ``add(S2, S1)``."""
        verdict = subcat.is_extension_closed(self.subcategory('S2', 'S1'))
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.witness, {
            'sub': 'S2', 'quotient': ['S1'], 'result': ['P1'],
        })

    def test_projectives_not_cone_closed(self):
        """The cokernel of ``S2 -> P1`` is ``S1``."""
        subcategory = self.subcategory('S2', 'P1')
        self.assertTrue(subcat.is_extension_closed(subcategory).passed)
        verdict = subcat.is_cone_closed(subcategory)
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.witness['result'], ['S1'])
        self.assertTrue(subcat.is_cocone_closed(subcategory).passed)

    def test_injectives_not_cocone_closed(self):
        """The kernel of ``P1 -> S1`` is ``S2``."""
        subcategory = self.subcategory('S1', 'P1')
        self.assertTrue(subcat.is_cone_closed(subcategory).passed)
        self.assertFalse(subcat.is_cocone_closed(subcategory).passed)

    def test_is_thick(self):
        """Single items and the extremes are thick."""
        for labels in ((), ('S2',), ('S1',), ('P1',), ('S2', 'S1', 'P1')):
            verdict = subcat.is_thick(self.subcategory(*labels))
            self.assertTrue(verdict.passed, labels)
            self.assertEqual(sorted(verdict.witness),
                             ['cocones', 'cones', 'extensions'])
        self.assertFalse(subcat.is_thick(self.subcategory('S2', 'P1')).passed)

    def test_closure_trace(self):
        """Every trace step names what it added."""
        closure, trace = subcat.closure_trace(self.subcategory('S2', 'P1'))
        self.assertEqual(closure, self.context.whole())
        self.assertEqual([step['added'] for step in trace], [['S1']])
        self.assertIn(trace[0]['kind'], ('cones', 'cocones', 'extensions'))


class ClosureLawsTestCase(SimpleTestCase):
    """The thick closure is a closure operator."""

    def setUp(self):
        """Reseed the subset generator."""
        factory.random.reseed_random(11)

    def test_extensive_and_idempotent(self):
        """``S <= thick(S)`` and ``thick(thick(S)) == thick(S)``."""
        for context in contexts():
            for _ in range(SAMPLES // 2):
                members = factories.fuzzy_subset(context.universe, 0, 3)
                generators = subcat.Subcategory(context, members)
                closure = subcat.thick_closure(context, generators)
                self.assertTrue(generators <= closure)
                self.assertEqual(subcat.thick_closure(context, closure),
                                 closure)
                self.assertTrue(subcat.is_thick(closure).passed)

    def test_monotone(self):
        """``S <= T`` implies ``thick(S) <= thick(T)``."""
        for context in contexts():
            for _ in range(SAMPLES // 2):
                larger = factories.fuzzy_subset(context.universe, 0, 4)
                smaller = factories.fuzzy_subset(larger, 0)
                self.assertTrue(
                    subcat.thick_closure(
                        context, subcat.Subcategory(context, smaller)
                    ) <= subcat.thick_closure(
                        context, subcat.Subcategory(context, larger)
                    )
                )


class EnumerateThickTestCase(SimpleTestCase):
    """Tests for ``enumerate_thick``."""

    def test_a2(self):
        """``mod kA2`` has five thick subcategories."""
        found = subcat.enumerate_thick(factories.a2_context())
        self.assertEqual([s.labels() for s in found], [
            [], ['S2'], ['S1'], ['P1'], ['S2', 'S1', 'P1'],
        ])

    def test_containing_top_row(self):
        """Five thick subcategories of the square contain the image of
        ``i_*``, and all of them pass ``is_thick``."""
        required = factories.b_subcategory(*TOP_ROW)
        found = subcat.enumerate_thick(factories.a2_recollement().b,
                                       require_contains=required)
        self.assertEqual([len(s) for s in found], [3, 5, 6, 6, 11])
        for subcategory in found:
            self.assertTrue(required <= subcategory)
            self.assertTrue(subcat.is_thick(subcategory).passed)

    def test_closed_under_intersection(self):
        """The intersection of two listed subcategories is listed too."""
        required = factories.b_subcategory(*TOP_ROW)
        for found in (
                subcat.enumerate_thick(factories.a2_context()),
                subcat.enumerate_thick(factories.a2_recollement().b,
                                       require_contains=required),
        ):
            for first in found:
                for second in found:
                    self.assertIn(first & second, found)


class TowerTestCase(SimpleTestCase):
    """Tests for ``tower_hat`` and ``tower_check``."""

    def setUp(self):
        """Pick ``mod kA2``."""
        self.context = factories.a2_context()

    def test_cocone_tower(self):
        """``add(S1, P1)`` reaches ``S2`` as a kernel."""
        tower = subcat.tower_check(subcat.Subcategory(self.context, [1, 2]))
        self.assertTrue(tower.saturates)
        self.assertEqual(subcat.tower_union(tower), self.context.whole())

    def test_depth_bound(self):
        """The tower stops at the depth bound."""
        tower = subcat.tower_hat(subcat.Subcategory(self.context, [0, 2]),
                                 subcat.SearchBounds(tower_depth=1))
        self.assertEqual(len(tower.layers), 2)

    def test_zero_tower(self):
        """The zero subcategory generates nothing."""
        tower = subcat.tower_hat(self.context.zero())
        self.assertEqual(len(tower.layers), 1)
        self.assertFalse(tower.saturates)


class SquareTowerTestCase(SimpleTestCase):
    """Towers over the commutative square whose steps need a composite end."""

    def setUp(self):
        """Pick the module category of the square."""
        self.context = factories.a2_recollement().b

    def test_cone_from_composite(self):
        """``(0,S2) + (S1,0) -> (S1,P1)_f`` is mono with cokernel ``(0,S1)``,
        so the first cone layer holds ``(0,S1)``."""
        source = factories.b_subcategory('(0,S2)', '(S1,0)', '(S1,P1)_f')
        target = factories.b_module('(S1,P1)_f')
        morphism = rep.hstack([
            rep.hom_basis(factories.b_module('(0,S2)'), target)[0],
            rep.hom_basis(factories.b_module('(S1,0)'), target)[0],
        ])
        self.assertEqual(sum(rep.kernel(morphism)[0].dims), 0)
        cokernel = rep.cokernel(morphism)[0]
        self.assertEqual(self.context.labels(self.context.decompose(cokernel)),
                         ['(0,S1)'])
        tower = subcat.tower_hat(source)
        self.assertIn('(0,S1)', tower.layers[1].labels())

    def test_cocone_onto_composite(self):
        """``(P1,S2)_f -> (S1,0) + (0,S2)`` is epi with kernel ``(S2,0)``, so
        the first cocone layer holds ``(S2,0)``."""
        source = factories.b_subcategory('(0,S2)', '(S1,0)', '(P1,S2)_f')
        top = factories.b_module('(P1,S2)_f')
        morphism = rep.vstack([
            rep.hom_basis(top, factories.b_module('(S1,0)'))[0],
            rep.hom_basis(top, factories.b_module('(0,S2)'))[0],
        ])
        self.assertEqual(sum(rep.cokernel(morphism)[0].dims), 0)
        kernel = rep.kernel(morphism)[0]
        self.assertEqual(self.context.labels(self.context.decompose(kernel)),
                         ['(S2,0)'])
        tower = subcat.tower_check(source)
        self.assertIn('(S2,0)', tower.layers[1].labels())

    def test_single_summand_bound(self):
        """With ``sum_mult=1`` the composite end is out of reach."""
        source = factories.b_subcategory('(0,S2)', '(S1,0)', '(S1,P1)_f')
        tower = subcat.tower_hat(source, subcat.SearchBounds(sum_mult=1))
        self.assertNotIn('(0,S1)', tower.layers[1].labels())

    def test_layers_grow(self):
        """Every layer contains the one before it and the members."""
        source = factories.b_subcategory('(0,S2)', '(S1,0)', '(S1,P1)_f')
        for tower in (subcat.tower_hat(source), subcat.tower_check(source)):
            self.assertEqual(tower.layers[0], source)
            for before, after in zip(tower.layers, tower.layers[1:]):
                self.assertTrue(before <= after)
                self.assertNotEqual(before, after)
