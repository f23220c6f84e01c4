"""Unit tests for the ``quiver`` module."""
import json
import os

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from quiverlab import factories, quiver

# pylint: disable=R0904
# Classes inheriting from TestCase will have 60+ too many public methods, and
# that's not something I have control over. Ignore it.

ALGEBRAS_DIR = os.path.join(os.path.dirname(__file__), 'algebras')


def load(name):
    """Return the spec stored in ``algebras/<name>``."""
    with open(os.path.join(ALGEBRAS_DIR, name)) as stream:
        return json.load(stream)


class ParseAlgebraTestCase(SimpleTestCase):
    """Tests for ``parse_algebra``."""

    def test_a2(self):
        """``kA2`` has basis ``e1, e2, a``."""
        self.assertEqual(quiver.parse_algebra(load('a2.json')).dimension, 3)

    def test_square(self):
        """The commutative square has four trivial paths, four arrows and one
        long path modulo the relation."""
        self.assertEqual(quiver.parse_algebra(load('square.json')).dimension, 9)

    def test_triangular_square(self):
        """The triangular algebra of ``kA2`` is the commutative square."""
        algebra = quiver.parse_algebra(load('t2_a2.json'))
        self.assertEqual(algebra.dimension, 9)
        self.assertEqual(list(algebra.vertices),
                         ['x.1', 'x.2', 'y.1', 'y.2'])

    def test_point(self):
        """A single vertex gives the ground field."""
        self.assertEqual(quiver.parse_algebra(load('point.json')).dimension, 1)

    def test_linear_quivers(self):
        """A linear quiver with ``n`` vertices has ``n (n + 1) / 2`` paths."""
        for length in (1, 2, 3):
            algebra = factories.AlgebraFactory(
                spec=factories.AlgebraSpecFactory(length=length)
            )
            self.assertEqual(algebra.dimension, length * (length + 1) // 2)

    def test_prime_override(self):
        """An explicit prime overrides the spec's own."""
        spec = dict(load('a2.json'), prime=7)
        self.assertEqual(quiver.parse_algebra(spec).prime, 7)
        self.assertEqual(quiver.parse_algebra(spec, prime=11).prime, 11)

    def test_prime_too_small(self):
        """The prime must exceed the algebra dimension."""
        with self.assertRaises(ValidationError):
            quiver.parse_algebra(load('a2.json'), prime=3)

    def test_cycle(self):
        """Oriented cycles are rejected."""
        with self.assertRaises(ValidationError):
            quiver.parse_algebra({
                'vertices': ['1', '2'],
                'arrows': [{'name': 'a', 'from': '1', 'to': '2'},
                           {'name': 'b', 'from': '2', 'to': '1'}],
            })

    def test_undeclared_vertex(self):
        """Arrows must join declared vertices."""
        with self.assertRaises(ValidationError):
            quiver.parse_algebra({
                'vertices': ['1'],
                'arrows': [{'name': 'a', 'from': '1', 'to': '2'}],
            })

    def test_bad_relation(self):
        """Relation paths must be composable, parallel and long enough."""
        spec = load('square.json')
        for relation in (
                [{'coeff': 1, 'path': ['alpha', 'gamma']}],
                [{'coeff': 1, 'path': ['alpha', 'beta']},
                 {'coeff': 1, 'path': ['delta']}],
                [{'coeff': 1, 'path': ['alpha']}]):
            with self.assertRaises(ValidationError):
                quiver.parse_algebra(dict(spec, relations=[relation]))

    def test_malformed(self):
        """Specs of the wrong shape are rejected."""
        for spec in ([], {}, {'vertices': []}, {'vertices': ['1'], 'x': 1},
                     {'vertices': ['1'], 'arrows': [{'name': 'a'}]},
                     {'triangular': {'vertices': ['1']}, 'arrows': []}):
            with self.assertRaises(ValidationError):
                quiver.parse_algebra(spec)

    def test_digest_stable(self):
        """Equal specs hash equally; the prime is part of the hash."""
        first = quiver.parse_algebra(load('a2.json'))
        second = quiver.parse_algebra(load('a2.json'))
        third = quiver.parse_algebra(load('a2.json'), prime=7)
        self.assertEqual(first.digest, second.digest)
        self.assertNotEqual(first.digest, third.digest)


class ModuleBuildersTestCase(SimpleTestCase):
    """Tests for ``simple_module``, ``projective_module`` and
    ``regular_module``."""

    def test_simples(self):
        """Simples have a single one in their dimension vector."""
        algebra = factories.a2_algebra()
        self.assertEqual(quiver.simple_module(algebra, '1').dims, (1, 0))
        self.assertEqual(quiver.simple_module(algebra, '2').dims, (0, 1))
        square = factories.square_algebra()
        for vertex in square.vertices:
            self.assertEqual(quiver.simple_module(square, vertex).dimension, 1)

    def test_projectives(self):
        """``P1`` has dimension vector ``(1, 1)`` and ``P2`` is simple."""
        algebra = factories.a2_algebra()
        p1 = quiver.projective_module(algebra, '1')
        self.assertEqual(p1.dims, (1, 1))
        self.assertEqual(p1.mat('a').tolist(), [[1]])
        self.assertEqual(quiver.projective_module(algebra, '2'),
                         quiver.simple_module(algebra, '2'))

    def test_square_projective(self):
        """The projective at the source of the square is one dimensional at
        every vertex."""
        algebra = quiver.parse_algebra(load('square.json'))
        self.assertEqual(quiver.projective_module(algebra, '1').dims,
                         (1, 1, 1, 1))

    def test_regular(self):
        """The regular module has the dimension of the algebra."""
        for algebra in (factories.a2_algebra(), factories.square_algebra()):
            self.assertEqual(quiver.regular_module(algebra).dimension,
                             algebra.dimension)

    def test_unknown_vertex(self):
        """Unknown vertices are rejected."""
        with self.assertRaises(ValidationError):
            quiver.simple_module(factories.a2_algebra(), '3')
        with self.assertRaises(ValidationError):
            quiver.projective_module(factories.a2_algebra(), '3')
