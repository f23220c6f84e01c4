"""Unit tests for the ``homology`` module."""
from django.test import SimpleTestCase

from quiverlab import factories, homology, quiver, rep
from quiverlab.exceptions import BoundsExceeded, PreconditionError

# pylint: disable=R0904
# Classes inheriting from TestCase will have 60+ too many public methods, and
# that's not something I have control over. Ignore it.


class ResolutionTestCase(SimpleTestCase):
    """Tests for ``projective_cover``, ``syzygy`` and ``global_dimension``."""

    def setUp(self):
        """Pick the commutative square."""
        self.algebra = factories.square_algebra()

    def test_cover_is_surjective(self):
        """Covers of every catalog item are epimorphisms."""
        for catalog in (factories.a2_catalog(),
                        factories.a2_recollement().b.catalog):
            for item in catalog.items:
                cover, epi = homology.projective_cover(item)
                self.assertTrue(epi.is_surjective())
                self.assertTrue(homology.is_projective(cover))

    def test_square_resolution(self):
        """The simple at the source has a resolution of length two, ending
        in the simple projective at the sink."""
        simple = quiver.simple_module(self.algebra, 'y.1')
        omega = homology.syzygy(simple)[0]
        self.assertEqual(omega.dims, (1, 1, 0, 1))
        self.assertEqual(homology.syzygy(omega)[0],
                         quiver.simple_module(self.algebra, 'x.2'))
        self.assertEqual(homology.projective_dimension(simple), 2)

    def test_global_dimension(self):
        """``kA2`` is hereditary; the square is not."""
        self.assertEqual(homology.global_dimension(factories.a2_algebra()), 1)
        self.assertEqual(homology.global_dimension(self.algebra), 2)
        point = quiver.parse_algebra(factories.POINT_SPEC)
        self.assertEqual(homology.global_dimension(point), 0)


class ExtTestCase(SimpleTestCase):
    """Tests for ``ext_dim``, ``ext1_basis`` and ``ext1_middle_terms``."""

    def setUp(self):
        """Fetch the ``kA2`` simples."""
        self.s1 = factories.a2_module('S1')
        self.s2 = factories.a2_module('S2')

    def test_square_ext2(self):
        """``Ext^2`` between the simples at source and sink is one
        dimensional."""
        algebra = factories.square_algebra()
        source = quiver.simple_module(algebra, 'y.1')
        sink = quiver.simple_module(algebra, 'x.2')
        self.assertEqual(homology.ext_dim(2, source, sink), 1)
        self.assertEqual(homology.ext_dim(1, source, sink), 0)
        self.assertEqual(homology.ext_dim(3, source, sink), 0)

    def test_degree_zero(self):
        """Degrees below one are rejected."""
        with self.assertRaises(PreconditionError):
            homology.ext_dim(0, self.s1, self.s2)

    def test_basis_matches_dimension(self):
        """``ext1_basis`` has ``ext_dim(1, -, -)`` classes."""
        catalog = factories.a2_recollement().b.catalog
        for source in catalog.items:
            for target in catalog.items:
                self.assertEqual(len(homology.ext1_basis(source, target)),
                                 homology.ext_dim(1, source, target))

    def test_realized_classes_are_exact(self):
        """Every basis class realizes to a nonsplit conflation."""
        catalog = factories.a2_recollement().b.catalog
        for source in catalog.items:
            for target in catalog.items:
                for ext_class in homology.ext1_basis(source, target):
                    sequence = homology.realize(ext_class)
                    self.assertTrue(sequence.is_exact())
                    self.assertEqual(sequence.sub, target)
                    self.assertEqual(sequence.quotient, source)
                    self.assertFalse(rep.are_isomorphic(
                        sequence.middle, rep.direct_sum(target, source),
                        catalog=catalog,
                    ))

    def test_middle_terms(self):
        """``S2 -> E -> S1`` has ``E`` split or ``P1``."""
        catalog = factories.a2_catalog()
        terms = homology.ext1_middle_terms(self.s1, self.s2, catalog=catalog)
        self.assertEqual([catalog.names(catalog.decompose(e)) for e in terms],
                         [['S2', 'S1'], ['P1']])

    def test_middle_terms_cap(self):
        """Too many classes exceed the cap."""
        with self.assertRaises(BoundsExceeded):
            homology.ext1_middle_terms(self.s1, self.s2, cap=1)


class ConflationTestCase(SimpleTestCase):
    """Tests for ``Conflation`` and the square builders."""

    def setUp(self):
        """Build ``S2 -> P1 -> S1``."""
        self.s1 = factories.a2_module('S1')
        self.s2 = factories.a2_module('S2')
        (ext_class,) = homology.ext1_basis(self.s1, self.s2)
        self.sequence = homology.realize(ext_class)

    def test_split(self):
        """Split conflations are exact."""
        split = homology.split_conflation(self.s2, self.s1)
        self.assertTrue(split.is_exact())
        self.assertEqual(split.middle.dims, (1, 1))

    def test_not_exact(self):
        """A zero deflation onto a nonzero module is not exact."""
        broken = homology.Conflation(
            self.sequence.inflation,
            rep.Morphism.zero(self.sequence.middle, self.s1),
        )
        self.assertFalse(broken.is_exact())

    def test_pushout_and_pullback(self):
        """Pushout and pullback of ``S2 -> P1`` against zero maps."""
        inclusion = self.sequence.inflation
        zero = rep.Morphism.zero(self.s2, self.s2)
        square = homology.pushout(inclusion, zero)
        self.assertEqual(square.corner.dims, (1, 1))
        square = homology.pullback(self.sequence.deflation,
                                   rep.Morphism.zero(self.s2, self.s1))
        self.assertEqual(square.corner.dims, (0, 2))

    def test_compose_extension(self):
        """Two classes with a common first term glue to ``S2 -> E -> S1 +
        S1``."""
        sequence = homology.compose_extension([self.sequence] * 2)
        self.assertTrue(sequence.is_exact())
        self.assertEqual(sequence.sub, self.s2)
        self.assertEqual(sequence.middle.dims, (2, 1))

    def test_compose_coextension(self):
        """Two classes with a common last term glue to ``S2 + S2 -> E ->
        S1``."""
        sequence = homology.compose_coextension([self.sequence] * 2)
        self.assertTrue(sequence.is_exact())
        self.assertEqual(sequence.quotient, self.s1)
        self.assertEqual(sequence.middle.dims, (1, 2))

    def test_long_exact_sequences(self):
        """The truncated long exact ``Hom(T, -)`` sequence of every probe
        conflation has vanishing alternating sum."""
        for catalog in (factories.a2_catalog(),
                        factories.a2_recollement().b.catalog):
            top = homology.global_dimension(catalog.algebra)
            for conflation in homology.probe_conflations(catalog):
                self.assertTrue(conflation.is_exact())
                for test in catalog.items:
                    self.assertEqual(
                        homology.euler_defect(conflation, test, top), 0
                    )
