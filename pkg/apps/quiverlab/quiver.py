"""Quivers, admissible relations and bound quiver algebras.

An algebra is described by a spec: a mapping with keys ``vertices``, ``arrows``,
``relations`` and, optionally, ``prime``. A spec may instead hold a single key
``triangular`` whose value is another spec; it then describes the triangular
matrix algebra over that algebra. See ``parse_algebra``.

A path is a tuple of arrow names ``(a1, ..., an)`` traversed from ``a1`` to
``an``. The trivial path at a vertex is the empty tuple. A module acts on column
vectors by ``M(p) = M(an) ... M(a1)``.

"""
from collections import namedtuple
import hashlib
import json
import logging

from django.core.exceptions import ValidationError
import networkx as nx
import numpy as np

from quiverlab import rep
from quiverlab.exactlin import PrimeField

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 101

# Names used for the two copies of a quiver inside its triangular matrix
# algebra, and for the arrows joining them.
TOP_COPY = 'x'
BOTTOM_COPY = 'y'
JOIN = 'f'

Arrow = namedtuple('Arrow', ('name', 'source', 'target'))


class Quiver(object):
    """A finite acyclic quiver.

    >>> quiver = Quiver(['1', '2'], [Arrow('a', '1', '2')])
    >>> quiver.paths('1', '2')
    [('a',)]
    >>> quiver.paths('2', '2')
    [()]

    """

    def __init__(self, vertices, arrows):
        self.vertices = tuple(str(vertex) for vertex in vertices)
        self.arrows = tuple(Arrow(*arrow) for arrow in arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError('Vertex names must be unique.')
        names = [arrow.name for arrow in self.arrows]
        if len(set(names)) != len(names):
            raise ValidationError('Arrow names must be unique.')
        self.graph = nx.MultiDiGraph()
        self.graph.add_nodes_from(self.vertices)
        for arrow in self.arrows:
            for end in (arrow.source, arrow.target):
                if end not in self.graph:
                    raise ValidationError(
                        'Arrow {} uses undeclared vertex {}.'.format(
                            arrow.name, end
                        )
                    )
            self.graph.add_edge(arrow.source, arrow.target, key=arrow.name)
        if not nx.is_directed_acyclic_graph(self.graph):
            raise ValidationError('The quiver has an oriented cycle.')
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._arrows_by_name = {arrow.name: arrow for arrow in self.arrows}
        self._paths = {}
        for vertex in self.vertices:
            self._collect_paths(vertex)

    def __repr__(self):
        return 'Quiver({!r}, {!r})'.format(list(self.vertices), list(self.arrows))

    def _collect_paths(self, source):
        """Record every path leaving ``source``, grouped by target."""
        found = {vertex: [] for vertex in self.vertices}
        stack = [(source, ())]
        while stack:
            vertex, path = stack.pop()
            found[vertex].append(path)
            for arrow in self.arrows_from(vertex):
                stack.append((arrow.target, path + (arrow.name,)))
        for target, paths in found.items():
            self._paths[(source, target)] = sorted(
                paths, key=lambda path: (len(path), path)
            )

    def vertex_index(self, vertex):
        """Return the position of ``vertex`` in ``vertices``."""
        try:
            return self._vertex_index[vertex]
        except KeyError:
            raise ValidationError('Unknown vertex {}.'.format(vertex))

    def arrow(self, name):
        """Return the arrow called ``name``."""
        try:
            return self._arrows_by_name[name]
        except KeyError:
            raise ValidationError('Unknown arrow {}.'.format(name))

    def arrows_from(self, vertex):
        """Return the arrows whose source is ``vertex``."""
        return [arrow for arrow in self.arrows if arrow.source == vertex]

    def arrows_into(self, vertex):
        """Return the arrows whose target is ``vertex``."""
        return [arrow for arrow in self.arrows if arrow.target == vertex]

    def paths(self, source, target):
        """Return the paths from ``source`` to ``target``, shortest first."""
        return list(self._paths[(source, target)])

    def path_ends(self, path):
        """Return ``(source, target)`` of a nontrivial, composable path."""
        arrows = [self.arrow(name) for name in path]
        for first, second in zip(arrows, arrows[1:]):
            if first.target != second.source:
                raise ValidationError('Path {} is not composable.'.format(
                    ' '.join(path)
                ))
        return arrows[0].source, arrows[-1].target

    def topological_order(self):
        """Return the vertices, every arrow pointing forward."""
        return list(nx.lexicographical_topological_sort(self.graph))


class Relation(object):
    """A linear combination of parallel paths of length at least two."""

    def __init__(self, quiver, terms, field):
        self.terms = tuple(
            (field.scalar(coeff), tuple(path)) for coeff, path in terms
        )
        if not self.terms:
            raise ValidationError('A relation needs at least one term.')
        ends = set()
        for _, path in self.terms:
            if len(path) < 2:
                raise ValidationError(
                    'Relation paths must have length at least two.'
                )
            ends.add(quiver.path_ends(path))
        if len(ends) != 1:
            raise ValidationError('Relation paths must be parallel.')
        self.source, self.target = ends.pop()

    def __repr__(self):
        return 'Relation({!r})'.format(list(self.terms))


class Algebra(object):
    """A bound quiver algebra ``kQ/I`` over a prime field.

    For each pair of vertices ``(s, t)`` the algebra keeps the paths from ``s``
    to ``t``, a projection from their span onto ``e_t (kQ/I) e_s`` and the
    residue paths whose images form a basis there.

    """

    def __init__(self, quiver, relations, field, spec=None):
        self.quiver = quiver
        self.field = field
        self.relations = tuple(relations)
        self.spec = spec
        self.digest = spec_digest(spec) if spec is not None else None
        self._projection = {}
        self._residues = {}
        ideal = self._ideal_generators()
        for source in quiver.vertices:
            for target in quiver.vertices:
                paths = quiver.paths(source, target)
                generators = ideal.get((source, target), [])
                if generators:
                    span = np.stack(generators, axis=1)
                else:
                    span = field.zeros(len(paths), 0)
                projection, reps = field.quotient_basis(span, len(paths))
                self._projection[(source, target)] = projection
                self._residues[(source, target)] = tuple(
                    paths[int(np.argmax(reps[:, j]))]
                    for j in range(reps.shape[1])
                )
        self.path_basis = tuple(
            (source, path)
            for source in quiver.vertices
            for target in quiver.vertices
            for path in self._residues[(source, target)]
        )

    def __repr__(self):
        return 'Algebra(vertices={}, dimension={})'.format(
            list(self.vertices), self.dimension
        )

    def _ideal_generators(self):
        """Return ``{(s, t): [vector, ...]}`` spanning the ideal ``e_t I e_s``.

        The ideal is spanned by the products ``w r u`` of a relation ``r`` with
        paths ``u`` into its source and ``w`` out of its target.

        """
        quiver = self.quiver
        generators = {}
        for relation in self.relations:
            for source in quiver.vertices:
                for before in quiver.paths(source, relation.source):
                    for target in quiver.vertices:
                        paths = quiver.paths(source, target)
                        index = {path: i for i, path in enumerate(paths)}
                        for after in quiver.paths(relation.target, target):
                            vector = self.field.zeros(len(paths), 1)[:, 0]
                            for coeff, path in relation.terms:
                                i = index[before + path + after]
                                vector[i] = (vector[i] + coeff) % self.field.prime
                            generators.setdefault((source, target), []).append(
                                vector
                            )
        return generators

    @property
    def vertices(self):
        """The vertices of the underlying quiver."""
        return self.quiver.vertices

    @property
    def arrows(self):
        """The arrows of the underlying quiver."""
        return self.quiver.arrows

    @property
    def prime(self):
        """The order of the ground field."""
        return self.field.prime

    @property
    def dimension(self):
        """The dimension of the algebra over its ground field."""
        return len(self.path_basis)

    def residue_paths(self, source, target):
        """Return the residue paths forming a basis of ``e_t A e_s``."""
        return self._residues[(source, target)]

    def path_coordinates(self, source, target, path):
        """Return the coordinates of ``path`` in the residue basis."""
        paths = self.quiver.paths(source, target)
        return self._projection[(source, target)][:, paths.index(path)]


def spec_digest(spec):
    """Return a stable hash of an algebra spec.

    >>> spec_digest({'vertices': ['1']}) == spec_digest({'vertices': ['1']})
    True

    """
    canonical = json.dumps(spec, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def triangular_spec(spec):
    """Return the spec of the triangular matrix algebra over ``spec``.

    The quiver has two copies of the original one, prefixed ``x.`` and ``y.``,
    and an arrow ``f.v: y.v -> x.v`` for every vertex ``v``. Relations are the
    original ones on each copy plus a commutativity relation for every original
    arrow ``a: s -> t``, namely ``f.t y.a = x.a f.s``.

    >>> spec = triangular_spec({
    ...     'vertices': ['1', '2'],
    ...     'arrows': [{'name': 'a', 'from': '1', 'to': '2'}],
    ... })
    >>> spec['vertices']
    ['x.1', 'x.2', 'y.1', 'y.2']
    >>> spec['relations']
    [[{'coeff': 1, 'path': ['y.a', 'f.2']}, {'coeff': -1, 'path': ['f.1', 'x.a']}]]

    """
    def rename(copy, name):
        return '{}.{}'.format(copy, name)

    vertices = [str(vertex) for vertex in spec.get('vertices', [])]
    arrows = list(spec.get('arrows', []))
    relations = list(spec.get('relations', []))
    result = {
        'vertices': [
            rename(copy, vertex)
            for copy in (TOP_COPY, BOTTOM_COPY)
            for vertex in vertices
        ],
        'arrows': [],
        'relations': [],
    }
    for copy in (TOP_COPY, BOTTOM_COPY):
        for arrow in arrows:
            result['arrows'].append({
                'name': rename(copy, arrow['name']),
                'from': rename(copy, arrow['from']),
                'to': rename(copy, arrow['to']),
            })
    for vertex in vertices:
        result['arrows'].append({
            'name': rename(JOIN, vertex),
            'from': rename(BOTTOM_COPY, vertex),
            'to': rename(TOP_COPY, vertex),
        })
    for copy in (TOP_COPY, BOTTOM_COPY):
        for relation in relations:
            result['relations'].append([
                {
                    'coeff': term['coeff'],
                    'path': [rename(copy, name) for name in term['path']],
                }
                for term in relation
            ])
    for arrow in arrows:
        result['relations'].append([
            {
                'coeff': 1,
                'path': [
                    rename(BOTTOM_COPY, arrow['name']),
                    rename(JOIN, arrow['to']),
                ],
            },
            {
                'coeff': -1,
                'path': [
                    rename(JOIN, arrow['from']),
                    rename(TOP_COPY, arrow['name']),
                ],
            },
        ])
    if 'prime' in spec:
        result['prime'] = spec['prime']
    return result


def _require(condition, message):
    """Raise a ``ValidationError`` carrying ``message`` unless ``condition``."""
    if not condition:
        raise ValidationError(message)


def validate_spec(spec):
    """Check the shape of an algebra spec. Raise ``ValidationError`` if bad.

    >>> from django.core.exceptions import ValidationError
    >>> validate_spec({'vertices': ['1'], 'arrows': [], 'relations': []})
    >>> try:
    ...     validate_spec({'arrows': []})
    ... except ValidationError:
    ...     'an exception was raised'
    'an exception was raised'

    """
    _require(isinstance(spec, dict), 'An algebra spec must be a mapping.')
    if 'triangular' in spec:
        _require(
            set(spec) <= {'triangular', 'prime'},
            'A triangular spec takes only the keys "triangular" and "prime".',
        )
        validate_spec(spec['triangular'])
        return
    unknown = set(spec) - {'vertices', 'arrows', 'relations', 'prime'}
    _require(not unknown, 'Unknown spec keys: {}.'.format(
        ', '.join(sorted(unknown))
    ))
    vertices = spec.get('vertices')
    _require(
        isinstance(vertices, list) and vertices,
        '"vertices" must be a non-empty list.',
    )
    _require(
        all(isinstance(vertex, (str, int)) for vertex in vertices),
        'Vertex names must be strings.',
    )
    arrows = spec.get('arrows', [])
    _require(isinstance(arrows, list), '"arrows" must be a list.')
    for arrow in arrows:
        _require(
            isinstance(arrow, dict) and set(arrow) == {'name', 'from', 'to'},
            'Each arrow needs exactly the keys "name", "from" and "to".',
        )
    relations = spec.get('relations', [])
    _require(isinstance(relations, list), '"relations" must be a list.')
    for relation in relations:
        _require(
            isinstance(relation, list) and relation,
            'Each relation must be a non-empty list of terms.',
        )
        for term in relation:
            _require(
                isinstance(term, dict) and set(term) == {'coeff', 'path'},
                'Each relation term needs exactly the keys "coeff" and "path".',
            )
            _require(
                isinstance(term['coeff'], int)
                and not isinstance(term['coeff'], bool),
                'Relation coefficients must be integers.',
            )
            _require(
                isinstance(term['path'], list),
                'A relation path must be a list of arrow names.',
            )
    if 'prime' in spec:
        _require(
            isinstance(spec['prime'], int)
            and not isinstance(spec['prime'], bool),
            '"prime" must be an integer.',
        )


def parse_algebra(spec, prime=None):
    """Build an ``Algebra`` from a spec.

    ``prime``, when given, overrides the spec's own ``prime``.

    >>> algebra = parse_algebra({
    ...     'vertices': ['1', '2'],
    ...     'arrows': [{'name': 'a', 'from': '1', 'to': '2'}],
    ...     'relations': [],
    ... })
    >>> algebra.dimension
    3
    >>> parse_algebra({'vertices': ['1']}).dimension
    1

    """
    validate_spec(spec)
    if 'triangular' in spec:
        inner = dict(spec['triangular'])
        if 'prime' in spec:
            inner['prime'] = spec['prime']
        return parse_algebra(triangular_spec(inner), prime=prime)
    prime = prime if prime is not None else spec.get('prime', DEFAULT_PRIME)
    field = PrimeField(prime)
    quiver = Quiver(
        spec['vertices'],
        [
            (str(arrow['name']), str(arrow['from']), str(arrow['to']))
            for arrow in spec.get('arrows', [])
        ],
    )
    relations = [
        Relation(
            quiver,
            [(term['coeff'], [str(name) for name in term['path']])
             for term in relation],
            field,
        )
        for relation in spec.get('relations', [])
    ]
    keyed = dict(spec)
    keyed['prime'] = field.prime
    algebra = Algebra(quiver, relations, field, spec=keyed)
    if field.prime <= algebra.dimension:
        raise ValidationError(
            'The prime {} must exceed the algebra dimension {}.'.format(
                field.prime, algebra.dimension
            )
        )
    logger.debug('parsed %r', algebra)
    return algebra


def simple_module(algebra, vertex):
    """Return the simple module at ``vertex``.

    >>> algebra = parse_algebra({
    ...     'vertices': ['1', '2'],
    ...     'arrows': [{'name': 'a', 'from': '1', 'to': '2'}],
    ... })
    >>> simple_module(algebra, '1').dims
    (1, 0)

    """
    index = algebra.quiver.vertex_index(vertex)
    dims = [0] * len(algebra.vertices)
    dims[index] = 1
    return rep.Representation(algebra, dims, {})


def projective_module(algebra, vertex):
    """Return the indecomposable projective module ``A e_v``.

    Its basis at ``w`` is the set of residue paths from ``vertex`` to ``w``. An
    arrow appends itself to each path, and the result is reduced modulo the
    relations.

    >>> algebra = parse_algebra({
    ...     'vertices': ['1', '2'],
    ...     'arrows': [{'name': 'a', 'from': '1', 'to': '2'}],
    ... })
    >>> projective_module(algebra, '1').dims
    (1, 1)
    >>> projective_module(algebra, '2').dims
    (0, 1)

    """
    algebra.quiver.vertex_index(vertex)
    field = algebra.field
    dims = [len(algebra.residue_paths(vertex, w)) for w in algebra.vertices]
    mats = {}
    for arrow in algebra.arrows:
        residues = algebra.residue_paths(vertex, arrow.source)
        columns = [
            algebra.path_coordinates(vertex, arrow.target, path + (arrow.name,))
            for path in residues
        ]
        rows = len(algebra.residue_paths(vertex, arrow.target))
        if columns:
            mats[arrow.name] = field.matrix(np.stack(columns, axis=1))
        else:
            mats[arrow.name] = field.zeros(rows, 0)
    return rep.Representation(algebra, dims, mats)


def regular_module(algebra):
    """Return the direct sum of all indecomposable projective modules."""
    return rep.direct_sum(*[
        projective_module(algebra, vertex) for vertex in algebra.vertices
    ])
