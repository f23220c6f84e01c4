"""Unit tests for the ``thickmaps`` module."""
from django.test import SimpleTestCase

from quiverlab import factories, subcat, thickmaps
from quiverlab.reports import FAIL, PASS, UNVERIFIED

# pylint: disable=R0904
# Classes inheriting from TestCase will have 60+ too many public methods, and
# that's not something I have control over. Ignore it.

TOP_ROW = ['(S2,0)', '(S1,0)', '(P1,0)']


class MapsTestCase(SimpleTestCase):
    """Tests for ``phi``, ``psi`` and ``i_lower_star_closure``."""

    def setUp(self):
        """Build the recollement of ``kA2``."""
        self.ctx = factories.a2_recollement()

    def test_i_lower_star_closure(self):
        """``add i_* a`` is the top row."""
        self.assertEqual(thickmaps.i_lower_star_closure(self.ctx).labels(),
                         TOP_ROW)

    def test_phi_of_restricted(self):
        """The restricted ``V`` maps to ``add(S1)``."""
        v = factories.b_subcategory('(S2,0)', '(P1,0)', '(S1,0)',
                                    '(S1,S1)_1', '(0,S1)')
        self.assertEqual(thickmaps.phi(self.ctx, v).labels(), ['S1'])

    def test_psi(self):
        """``psi(add(S2))`` adds the items with ``y`` in ``add(S2)``."""
        w = factories.a2_subcategory('S2')
        # a and c share one context here.
        self.assertEqual(sorted(thickmaps.psi(self.ctx, w).labels()), sorted(
            TOP_ROW + ['(0,S2)', '(S2,S2)_1', '(P1,S2)_f']
        ))

    def test_round_trip(self):
        """``phi(psi(W)) == W`` for every thick ``W``."""
        for w in subcat.enumerate_thick(self.ctx.c):
            self.assertEqual(thickmaps.phi(self.ctx, thickmaps.psi(self.ctx, w)),
                             w)


class VerifyBijectionTestCase(SimpleTestCase):
    """Tests for ``verify_bijection``."""

    def setUp(self):
        """Build the recollement of ``kA2``."""
        self.ctx = factories.a2_recollement()

    def test_pairs(self):
        """Five pairs, smallest first."""
        report = thickmaps.verify_bijection(self.ctx)
        self.assertEqual(report.status, PASS, report.failures())
        pairs = report.payload['pairs']
        self.assertEqual([len(pair['V']) for pair in pairs], [3, 5, 6, 6, 11])
        self.assertEqual([pair['phiV'] for pair in pairs], [
            [], ['S1'], ['S2'], ['P1'], ['S2', 'S1', 'P1'],
        ])
        self.assertEqual(pairs[0]['V'], TOP_ROW)
        self.assertEqual((report.payload['thick_b'],
                          report.payload['thick_c']), (5, 5))

    def test_broken_psi(self):
        """A ``psi`` that forgets ``i_* a`` is caught."""
        def broken(ctx, subcategory):
            found = thickmaps.psi(ctx, subcategory)
            return subcat.Subcategory(
                ctx.b, found.members - {ctx.b.catalog.index_of('(S1,0)')}
            )

        report = thickmaps.verify_bijection(self.ctx, psi_map=broken)
        self.assertEqual(report.status, FAIL)
        failed = [check['name'] for check in report.failures()]
        self.assertIn('psi_lands_in_thick', failed)
        self.assertIn('psi_phi_identity', failed)


class LeftFunctorsTestCase(SimpleTestCase):
    """Tests for ``image_under_left_functors``."""

    def setUp(self):
        """Build the recollement of ``kA2``."""
        self.ctx = factories.a2_recollement()

    def test_containing_top_row(self):
        """A ``V`` holding ``i_* a`` maps onto all of ``a``."""
        report = thickmaps.image_under_left_functors(
            self.ctx, factories.b_subcategory(*TOP_ROW)
        )
        self.assertEqual(report.status, PASS, report.failures())
        self.assertEqual(report.payload['i_upper_star'], ['S2', 'S1', 'P1'])

    def test_not_applicable(self):
        """``add(S2,S2)_1`` does not hold ``i_* i^! V``; the check is left
        undecided."""
        report = thickmaps.image_under_left_functors(
            self.ctx, factories.b_subcategory('(S2,S2)_1')
        )
        self.assertEqual(report.status, UNVERIFIED)
        self.assertEqual(report.payload['i_upper_shriek'], ['S2'])
        self.assertEqual(report.payload['i_upper_star'], [])
