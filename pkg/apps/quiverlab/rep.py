"""Modules over bound quiver algebras, and the morphisms between them.

A ``Representation`` stores one dimension per vertex and one matrix per arrow.
A ``Morphism`` stores one matrix per vertex. Both are immutable and hash on
their exact data, so they can be used as cache keys.

The ``IndecCatalog`` is the list of indecomposable modules of an algebra up to
isomorphism, within a per-vertex dimension bound. Every other module is handled
through its decomposition into catalog items.

Randomized steps take an explicit ``seed``. They never guess: when no witness
turns up after ``trials`` attempts an ``AmbiguousResult`` is raised.

"""
import functools
import itertools
import logging

from django.core.exceptions import ValidationError
import numpy as np
from sympy import Poly, symbols

from quiverlab.exceptions import (
    AmbiguousResult,
    BoundsExceeded,
    CatalogMiss,
    PreconditionError,
)

logger = logging.getLogger(__name__)

DEFAULT_SEED = 42
DEFAULT_TRIALS = 32
DEFAULT_BUDGET = 10 ** 7
DEFAULT_DIM_BOUND = 4

_T = symbols('t')


def _frozen(matrix):
    """Return ``matrix`` marked read-only."""
    matrix = np.ascontiguousarray(matrix, dtype=np.int64)
    matrix.setflags(write=False)
    return matrix


class Representation(object):
    """A finite-dimensional module, given as a representation of the quiver.

    ``dims`` lists the dimension at each vertex, in the algebra's vertex
    order. ``mats`` maps arrow names to matrices with ``dim(target)`` rows and
    ``dim(source)`` columns; missing arrows act by zero.

    """

    def __init__(self, algebra, dims, mats, check=True):
        self.algebra = algebra
        field = algebra.field
        self.dims = tuple(int(dim) for dim in dims)
        if len(self.dims) != len(algebra.vertices):
            raise ValidationError('Expected {} dimensions, got {}.'.format(
                len(algebra.vertices), len(self.dims)
            ))
        if any(dim < 0 for dim in self.dims):
            raise ValidationError('Dimensions must be non-negative.')
        unknown = set(mats) - {arrow.name for arrow in algebra.arrows}
        if unknown:
            raise ValidationError('Unknown arrows: {}.'.format(
                ', '.join(sorted(unknown))
            ))
        matrices = []
        for arrow in algebra.arrows:
            shape = (self.dim(arrow.target), self.dim(arrow.source))
            if arrow.name in mats:
                matrix = field.matrix(mats[arrow.name])
                if matrix.size == 0:
                    matrix = field.zeros(*shape)
                if matrix.shape != shape:
                    raise ValidationError(
                        'Arrow {} needs a {}x{} matrix, got {}x{}.'.format(
                            arrow.name, shape[0], shape[1], *matrix.shape
                        )
                    )
            else:
                matrix = field.zeros(*shape)
            matrices.append(_frozen(matrix))
        self._mats = tuple(matrices)
        self._index = {arrow.name: i for i, arrow in enumerate(algebra.arrows)}
        self._hash = hash((
            id(algebra),
            self.dims,
            tuple(matrix.tobytes() for matrix in self._mats),
        ))
        if check:
            for relation in algebra.relations:
                if not field.is_zero(self.relation_matrix(relation)):
                    raise ValidationError(
                        'The module does not satisfy {!r}.'.format(relation)
                    )

    def __repr__(self):
        return 'Representation(dims={})'.format(self.dims)

    def __eq__(self, other):
        return isinstance(other, Representation) and \
            self.algebra is other.algebra and \
            self.dims == other.dims and \
            all(np.array_equal(a, b) for a, b in zip(self._mats, other._mats))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return self._hash

    def key(self):
        """Return a hashable value identifying this module's exact data."""
        return (self.dims, tuple(matrix.tobytes() for matrix in self._mats))

    @property
    def field(self):
        """The ground field."""
        return self.algebra.field

    @property
    def dimension(self):
        """The total dimension."""
        return sum(self.dims)

    @property
    def mats(self):
        """A mapping from arrow names to matrices."""
        return {arrow.name: matrix
                for arrow, matrix in zip(self.algebra.arrows, self._mats)}

    def is_zero(self):
        """Tell whether this is the zero module."""
        return self.dimension == 0

    def dim(self, vertex):
        """Return the dimension at ``vertex``."""
        return self.dims[self.algebra.quiver.vertex_index(vertex)]

    def mat(self, arrow):
        """Return the matrix of the arrow called ``arrow``."""
        return self._mats[self._index[arrow]]

    def offsets(self):
        """Return the starting row of each vertex block in the total space."""
        return tuple(itertools.accumulate((0,) + self.dims[:-1]))

    def path_matrix(self, path, source=None):
        """Return the action of ``path``. Trivial paths need ``source``."""
        if not path:
            return self.field.identity(self.dim(source))
        result = self.mat(path[0])
        for name in path[1:]:
            result = self.field.mul(self.mat(name), result)
        return result

    def relation_matrix(self, relation):
        """Return the action of a relation; zero on a genuine module."""
        field = self.field
        result = field.zeros(self.dim(relation.target), self.dim(relation.source))
        for coeff, path in relation.terms:
            result = field.add(result, field.scale(coeff, self.path_matrix(path)))
        return result


class Morphism(object):
    """A module homomorphism, given by one matrix per vertex."""

    def __init__(self, source, target, mats, check=True):
        if source.algebra is not target.algebra:
            raise ValidationError('Morphism ends live over different algebras.')
        self.source = source
        self.target = target
        algebra = source.algebra
        field = algebra.field
        if isinstance(mats, dict):
            mats = [mats.get(vertex) for vertex in algebra.vertices]
        matrices = []
        for vertex, matrix in zip(algebra.vertices, mats):
            shape = (target.dim(vertex), source.dim(vertex))
            if matrix is None:
                matrix = field.zeros(*shape)
            matrix = field.matrix(matrix)
            if matrix.size == 0:
                matrix = field.zeros(*shape)
            if matrix.shape != shape:
                raise ValidationError(
                    'Vertex {} needs a {}x{} matrix, got {}x{}.'.format(
                        vertex, shape[0], shape[1], *matrix.shape
                    )
                )
            matrices.append(_frozen(matrix))
        if len(matrices) != len(algebra.vertices):
            raise ValidationError('Expected one matrix per vertex.')
        self._mats = tuple(matrices)
        self._hash = hash((
            source, target, tuple(matrix.tobytes() for matrix in self._mats)
        ))
        if check:
            for arrow in algebra.arrows:
                left = field.mul(self.mat(arrow.target), source.mat(arrow.name))
                right = field.mul(target.mat(arrow.name), self.mat(arrow.source))
                if not np.array_equal(left, right):
                    raise ValidationError(
                        'The maps do not commute with arrow {}.'.format(
                            arrow.name
                        )
                    )

    def __repr__(self):
        return 'Morphism({!r} -> {!r})'.format(self.source, self.target)

    def __eq__(self, other):
        return isinstance(other, Morphism) and \
            self.source == other.source and \
            self.target == other.target and \
            all(np.array_equal(a, b) for a, b in zip(self._mats, other._mats))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return self._hash

    @property
    def field(self):
        """The ground field."""
        return self.source.field

    @property
    def mats(self):
        """A tuple of matrices, in vertex order."""
        return self._mats

    def mat(self, vertex):
        """Return the matrix at ``vertex``."""
        return self._mats[self.source.algebra.quiver.vertex_index(vertex)]

    @classmethod
    def identity(cls, module):
        """Return the identity morphism of ``module``."""
        field = module.field
        return cls(module, module, [field.identity(d) for d in module.dims],
                   check=False)

    @classmethod
    def zero(cls, source, target):
        """Return the zero morphism ``source -> target``."""
        return cls(source, target, [None] * len(source.dims), check=False)

    def compose(self, other):
        """Return ``self`` after ``other``."""
        if other.target != self.source:
            raise ValidationError('Morphisms are not composable.')
        field = self.field
        return Morphism(
            other.source,
            self.target,
            [field.mul(a, b) for a, b in zip(self._mats, other._mats)],
            check=False,
        )

    def __add__(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValidationError('Only parallel morphisms can be added.')
        field = self.field
        return Morphism(
            self.source,
            self.target,
            [field.add(a, b) for a, b in zip(self._mats, other._mats)],
            check=False,
        )

    def scale(self, value):
        """Return ``value`` times this morphism."""
        field = self.field
        return Morphism(
            self.source,
            self.target,
            [field.scale(value, matrix) for matrix in self._mats],
            check=False,
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        """Tell whether every component is zero."""
        return all(not np.any(matrix) for matrix in self._mats)

    def ranks(self):
        """Return the rank at each vertex."""
        return tuple(self.field.rank(matrix) for matrix in self._mats)

    def is_injective(self):
        """Tell whether this morphism is a monomorphism."""
        return self.ranks() == self.source.dims

    def is_surjective(self):
        """Tell whether this morphism is an epimorphism."""
        return self.ranks() == self.target.dims

    def is_isomorphism(self):
        """Tell whether this morphism is invertible."""
        return self.source.dims == self.target.dims and self.is_injective()

    def block_matrix(self):
        """Return the block diagonal matrix on the total spaces."""
        field = self.field
        result = field.zeros(self.target.dimension, self.source.dimension)
        rows = self.target.offsets()
        cols = self.source.offsets()
        for i, matrix in enumerate(self._mats):
            result[rows[i]:rows[i] + matrix.shape[0],
                   cols[i]:cols[i] + matrix.shape[1]] = matrix
        return result


def zero_module(algebra):
    """Return the zero module."""
    return Representation(algebra, [0] * len(algebra.vertices), {}, check=False)


def _block_diagonal(field, blocks):
    """Return the block diagonal matrix with the given blocks."""
    rows = sum(block.shape[0] for block in blocks)
    cols = sum(block.shape[1] for block in blocks)
    result = field.zeros(rows, cols)
    row = col = 0
    for block in blocks:
        result[row:row + block.shape[0], col:col + block.shape[1]] = block
        row += block.shape[0]
        col += block.shape[1]
    return result


def direct_sum(*modules):
    """Return the direct sum of ``modules``, summands in the given order.

    >>> from quiverlab import factories
    >>> s1 = factories.a2_module('S1')
    >>> direct_sum(s1, factories.a2_module('S2')).dims
    (1, 1)
    >>> direct_sum(s1) == s1
    True

    """
    if not modules:
        raise ValueError('direct_sum needs at least one module')
    algebra = modules[0].algebra
    field = algebra.field
    dims = [sum(module.dims[i] for module in modules)
            for i in range(len(algebra.vertices))]
    mats = {
        arrow.name: _block_diagonal(
            field, [module.mat(arrow.name) for module in modules]
        )
        for arrow in algebra.arrows
    }
    return Representation(algebra, dims, mats, check=False)


def diagonal(morphisms):
    """Return the direct sum of ``morphisms``."""
    field = morphisms[0].field
    source = direct_sum(*[morphism.source for morphism in morphisms])
    target = direct_sum(*[morphism.target for morphism in morphisms])
    return Morphism(source, target, [
        _block_diagonal(field, [morphism.mats[i] for morphism in morphisms])
        for i in range(len(source.dims))
    ], check=False)


def hstack(morphisms):
    """Return ``(f1, ..., fn): X1 + ... + Xn -> Y`` for ``fi: Xi -> Y``."""
    field = morphisms[0].field
    target = morphisms[0].target
    source = direct_sum(*[morphism.source for morphism in morphisms])
    mats = []
    for i, dim in enumerate(target.dims):
        blocks = [morphism.mats[i] for morphism in morphisms]
        mats.append(
            np.concatenate(blocks, axis=1) if blocks else field.zeros(dim, 0)
        )
    return Morphism(source, target, mats, check=False)


def vstack(morphisms):
    """Return ``(f1; ...; fn): X -> Y1 + ... + Yn`` for ``fi: X -> Yi``."""
    source = morphisms[0].source
    target = direct_sum(*[morphism.target for morphism in morphisms])
    mats = [
        np.concatenate([morphism.mats[i] for morphism in morphisms], axis=0)
        for i in range(len(source.dims))
    ]
    return Morphism(source, target, mats, check=False)


def linear_combination(coeffs, morphisms, source=None, target=None):
    """Return ``sum(c * f)``; ``source`` and ``target`` serve an empty sum."""
    if not morphisms:
        return Morphism.zero(source, target)
    field = morphisms[0].field
    mats = []
    for i in range(len(morphisms[0].mats)):
        total = field.zeros(*morphisms[0].mats[i].shape)
        for coeff, morphism in zip(coeffs, morphisms):
            total = total + field.scalar(coeff) * morphism.mats[i]
        mats.append(np.mod(total, field.prime))
    return Morphism(morphisms[0].source, morphisms[0].target, mats, check=False)


@functools.lru_cache(maxsize=8192)
def hom_basis(source, target):
    """Return a basis of ``Hom(source, target)`` as a tuple of morphisms.

    The unknowns are the matrices ``F_v``, flattened row by row. Every arrow
    ``a: s -> t`` contributes the equation ``F_t X_a - Y_a F_s = 0``.

    >>> from quiverlab import factories
    >>> len(hom_basis(factories.a2_module('P1'), factories.a2_module('S1')))
    1
    >>> hom_basis(factories.a2_module('S1'), factories.a2_module('S2'))
    ()

    """
    if source.algebra is not target.algebra:
        raise PreconditionError('Hom needs modules over the same algebra.')
    algebra = source.algebra
    field = algebra.field
    sizes = [y * x for x, y in zip(source.dims, target.dims)]
    unknowns = sum(sizes)
    if unknowns == 0:
        return ()
    offsets = list(itertools.accumulate([0] + sizes[:-1]))
    blocks = []
    for arrow in algebra.arrows:
        s = algebra.quiver.vertex_index(arrow.source)
        t = algebra.quiver.vertex_index(arrow.target)
        rows = target.dims[t] * source.dims[s]
        if rows == 0:
            continue
        block = field.zeros(rows, unknowns)
        if sizes[t]:
            block[:, offsets[t]:offsets[t] + sizes[t]] = field.kron(
                field.identity(target.dims[t]),
                source.mat(arrow.name).T,
            )
        if sizes[s]:
            block[:, offsets[s]:offsets[s] + sizes[s]] = field.add(
                block[:, offsets[s]:offsets[s] + sizes[s]],
                field.neg(field.kron(
                    target.mat(arrow.name),
                    field.identity(source.dims[s]),
                )),
            )
        blocks.append(block)
    system = np.concatenate(blocks, axis=0) if blocks else \
        field.zeros(0, unknowns)
    kernel = field.kernel_basis(system)
    basis = []
    for j in range(kernel.shape[1]):
        column = kernel[:, j]
        mats = [
            column[offsets[i]:offsets[i] + sizes[i]].reshape(
                target.dims[i], source.dims[i]
            )
            for i in range(len(sizes))
        ]
        basis.append(Morphism(source, target, mats, check=False))
    return tuple(basis)


def hom_dim(source, target):
    """Return ``dim Hom(source, target)``."""
    return len(hom_basis(source, target))


def kernel(morphism):
    """Return ``(K, inclusion)`` for the kernel of ``morphism``."""
    source = morphism.source
    algebra = source.algebra
    field = algebra.field
    bases = [field.kernel_basis(matrix) for matrix in morphism.mats]
    dims = [basis.shape[1] for basis in bases]
    mats = {}
    for arrow in algebra.arrows:
        s = algebra.quiver.vertex_index(arrow.source)
        t = algebra.quiver.vertex_index(arrow.target)
        image = field.mul(source.mat(arrow.name), bases[s])
        mats[arrow.name] = field.solve_matrix(bases[t], image)
    module = Representation(algebra, dims, mats, check=False)
    return module, Morphism(module, source, bases, check=False)


def cokernel(morphism):
    """Return ``(C, projection)`` for the cokernel of ``morphism``."""
    target = morphism.target
    algebra = target.algebra
    field = algebra.field
    quotients = [
        field.quotient_basis(matrix, dim)
        for matrix, dim in zip(morphism.mats, target.dims)
    ]
    dims = [projection.shape[0] for projection, _ in quotients]
    mats = {}
    for arrow in algebra.arrows:
        s = algebra.quiver.vertex_index(arrow.source)
        t = algebra.quiver.vertex_index(arrow.target)
        mats[arrow.name] = field.mul(
            quotients[t][0], target.mat(arrow.name), quotients[s][1]
        )
    module = Representation(algebra, dims, mats, check=False)
    return module, Morphism(
        target, module, [projection for projection, _ in quotients], check=False
    )


def descend(projection, morphism):
    """Return the map ``C -> Z`` induced by ``morphism: Y -> Z`` on a cokernel.

    ``projection: Y -> C`` is a cokernel projection built by ``cokernel``, and
    ``morphism`` must vanish on its kernel.

    """
    field = morphism.field
    mats = []
    for matrix, proj in zip(morphism.mats, projection.mats):
        section = field.solve_matrix(proj, field.identity(proj.shape[0]))
        mats.append(field.mul(matrix, section))
    return Morphism(projection.target, morphism.target, mats)


def lift(inclusion, morphism):
    """Return the map ``W -> K`` through which ``morphism: W -> Y`` factors.

    ``inclusion: K -> Y`` is a monomorphism containing the image of
    ``morphism``; otherwise ``ValidationError`` is raised.

    """
    field = morphism.field
    mats = []
    for matrix, incl in zip(morphism.mats, inclusion.mats):
        solution = field.solve_matrix(incl, matrix)
        if solution is None:
            raise ValidationError('The morphism does not factor.')
        mats.append(solution)
    return Morphism(morphism.source, inclusion.source, mats)


def top_basis(module):
    """Return, per vertex, coset representatives of the top of ``module``.

    The top at ``v`` is ``M_v`` modulo the images of the arrows ending at ``v``.

    """
    algebra = module.algebra
    field = algebra.field
    tops = []
    for vertex in algebra.vertices:
        images = [module.mat(arrow.name)
                  for arrow in algebra.quiver.arrows_into(vertex)]
        dim = module.dim(vertex)
        span = np.concatenate(images, axis=1) if images else \
            field.zeros(dim, 0)
        tops.append(field.quotient_basis(span, dim)[1])
    return tuple(tops)


def _minimal_polynomial(field, start, step):
    """Return the minimal polynomial of ``step`` on the cyclic span of ``start``.

    The result is a list of coefficients, leading coefficient first.

    """
    vectors = [start]
    while True:
        nxt = step(vectors[-1])
        coords = field.solve(np.stack(vectors, axis=1), nxt)
        if coords is not None:
            coeffs = [1] + [
                (-int(c)) % field.prime for c in reversed(coords)
            ]
            return coeffs
        vectors.append(nxt)


def _poly(field, coeffs):
    return Poly(coeffs, _T, modulus=field.prime)


def _evaluate(field, poly, matrix):
    """Return ``poly(matrix)`` by Horner's rule."""
    result = field.zeros(*matrix.shape)
    for coeff in poly.all_coeffs():
        result = field.add(field.mul(result, matrix),
                           field.scale(int(coeff), field.identity(matrix.shape[0])))
    return result


class EndomorphismRing(object):
    """The algebra ``End(X)``, in coordinates of ``hom_basis(X, X)``."""

    def __init__(self, module):
        self.module = module
        self.field = field = module.field
        self.basis = hom_basis(module, module)
        self.dimension = len(self.basis)
        self.matrices = [f.block_matrix() for f in self.basis]
        size = module.dimension
        self._vectors = np.stack(
            [matrix.reshape(-1) for matrix in self.matrices], axis=1
        ) if self.matrices else field.zeros(size * size, 0)
        table = np.zeros((self.dimension,) * 3, dtype=np.int64)
        for i, left in enumerate(self.matrices):
            for j, right in enumerate(self.matrices):
                table[i, j] = self.coordinates(field.mul(left, right))
        self.table = table
        self.one = self.coordinates(field.identity(size))

    def coordinates(self, matrix):
        """Return the coordinates of an endomorphism matrix."""
        coords = self.field.solve(self._vectors, matrix.reshape(-1))
        if coords is None:
            raise ValueError('matrix is not an endomorphism of the module')
        return coords

    def left_multiplication(self, element):
        """Return the matrix of ``y -> element * y`` in basis coordinates."""
        return np.mod(np.einsum('i,ijk->kj', element, self.table),
                      self.field.prime)

    def multiply(self, left, right):
        """Return ``left * right`` for coordinate vectors."""
        return np.mod(np.einsum('i,j,ijk->k', left, right, self.table),
                      self.field.prime)

    def matrix_of(self, element):
        """Return the block matrix of an element given in coordinates."""
        total = self.field.zeros(*self.matrices[0].shape)
        for coeff, matrix in zip(element, self.matrices):
            total = total + int(coeff) * matrix
        return np.mod(total, self.field.prime)

    def radical(self):
        """Return a matrix whose columns span the Jacobson radical.

        The radical is the null space of the trace form of the regular
        representation, which is valid when the characteristic exceeds the
        dimension.

        """
        field = self.field
        lefts = [self.left_multiplication(np.eye(self.dimension, dtype=np.int64)[i])
                 for i in range(self.dimension)]
        gram = field.zeros(self.dimension, self.dimension)
        for i, left in enumerate(lefts):
            for j, right in enumerate(lefts):
                gram[i, j] = int(np.trace(field.mul(left, right))) % field.prime
        return field.kernel_basis(gram)


def is_indecomposable(module, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """Tell whether ``module`` is indecomposable, i.e. ``End(module)`` is local.

    ``End / rad End`` is a local ring exactly when it is a finite field. That is
    decided from its commutativity and from the minimal polynomial of random
    elements: a reducible one rules it out, an irreducible one of full degree
    confirms it.

    >>> from quiverlab import factories
    >>> is_indecomposable(factories.a2_module('P1'))
    True
    >>> is_indecomposable(direct_sum(
    ...     factories.a2_module('S1'), factories.a2_module('S2')))
    False

    """
    if module.is_zero():
        raise PreconditionError('The zero module is not indecomposable.')
    ring = EndomorphismRing(module)
    if ring.dimension == 1:
        return True
    field = ring.field
    if field.prime <= ring.dimension:
        raise PreconditionError(
            'The prime {} must exceed dim End = {}.'.format(
                field.prime, ring.dimension
            )
        )
    projection, reps = field.quotient_basis(ring.radical(), ring.dimension)
    size = projection.shape[0]
    if size == 1:
        return True

    def multiply(left, right):
        return field.mul(projection, ring.multiply(
            field.mul(reps, left), field.mul(reps, right)
        ).reshape(-1, 1)).reshape(-1)

    units = np.eye(size, dtype=np.int64)
    for a in range(size):
        for b in range(a + 1, size):
            if not np.array_equal(multiply(units[a], units[b]),
                                  multiply(units[b], units[a])):
                return False
    one = field.mul(projection, ring.one.reshape(-1, 1)).reshape(-1)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        element = rng.integers(0, field.prime, size=size)
        coeffs = _minimal_polynomial(
            field, one, lambda vector, x=element: multiply(x, vector)
        )
        poly = _poly(field, coeffs)
        if not poly.is_irreducible:
            return False
        if poly.degree() == size:
            return True
    raise AmbiguousResult(
        'Could not decide whether End is local after {} trials.'.format(trials)
    )


def _split(module, seed, trials):
    """Return two summands ``(K1, K2)`` with ``module = K1 + K2``, or ``None``.

    A random endomorphism whose minimal polynomial has two coprime factors
    ``g * h`` splits the module into ``ker g(phi)`` and ``ker h(phi)``.

    """
    ring = EndomorphismRing(module)
    field = ring.field
    size = module.dimension
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        element = rng.integers(0, field.prime, size=ring.dimension)
        matrix = ring.matrix_of(element)
        coeffs = _minimal_polynomial(
            field,
            field.identity(size).reshape(-1),
            lambda vector, m=matrix: field.mul(
                vector.reshape(size, size), m
            ).reshape(-1),
        )
        _, factors = _poly(field, coeffs).factor_list()
        if len(factors) < 2:
            continue
        first = factors[0][0] ** factors[0][1]
        rest = _poly(field, [1])
        for factor, power in factors[1:]:
            rest = rest * factor ** power
        summands = []
        for poly in (first, rest):
            value = _evaluate(field, poly, matrix)
            blocks = []
            offsets = module.offsets()
            for i, dim in enumerate(module.dims):
                blocks.append(value[offsets[i]:offsets[i] + dim,
                                    offsets[i]:offsets[i] + dim])
            summands.append(kernel(Morphism(module, module, blocks,
                                            check=False))[0])
        return tuple(summands)
    return None


def _isomorphic_indecomposables(first, second):
    """Decide ``first ~ second`` for indecomposable modules, deterministically.

    Two indecomposables are isomorphic iff some ``g f`` with ``f`` and ``g``
    running over Hom bases is not nilpotent.

    """
    field = first.field
    forward = hom_basis(first, second)
    backward = hom_basis(second, first)
    for f in forward:
        for g in backward:
            if not field.is_nilpotent(g.compose(f).block_matrix()):
                return True
    return False


def are_isomorphic(first, second, catalog=None, seed=DEFAULT_SEED,
                   trials=DEFAULT_TRIALS):
    """Tell whether two modules are isomorphic.

    Dimension vectors and Hom dimensions rule out most pairs. A random
    combination of ``hom_basis(first, second)`` that is invertible proves
    isomorphism. When both modules are indecomposable the question is settled
    deterministically; otherwise a ``catalog`` settles it by comparing
    decompositions. Failing all that, ``AmbiguousResult`` is raised.

    >>> from quiverlab import factories
    >>> s1, s2 = factories.a2_module('S1'), factories.a2_module('S2')
    >>> are_isomorphic(s1, s1), are_isomorphic(s1, s2)
    (True, False)

    """
    if first.algebra is not second.algebra:
        raise PreconditionError('Modules live over different algebras.')
    if first.dims != second.dims:
        return False
    if first.is_zero():
        return True
    forward = hom_basis(first, second)
    dims = {len(forward), hom_dim(second, first),
            hom_dim(first, first), hom_dim(second, second)}
    if len(dims) != 1:
        return False
    if catalog is not None and \
            catalog.fingerprint(first) != catalog.fingerprint(second):
        return False
    field = first.field
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        coeffs = rng.integers(0, field.prime, size=len(forward))
        if linear_combination(coeffs, list(forward)).is_isomorphism():
            return True
    if is_indecomposable(first, seed, trials) and \
            is_indecomposable(second, seed, trials):
        return _isomorphic_indecomposables(first, second)
    if catalog is not None:
        return catalog.decompose(first) == catalog.decompose(second)
    raise AmbiguousResult(
        'No isomorphism witness after {} trials.'.format(trials)
    )


def default_label(module, index):
    """Return ``S<v>``, ``P<v>`` or ``M<index>`` for an indecomposable."""
    algebra = module.algebra
    if module.dimension == 1:
        return 'S{}'.format(algebra.vertices[module.dims.index(1)])
    tops = [top.shape[1] for top in top_basis(module)]
    if sum(tops) == 1:
        vertex = algebra.vertices[tops.index(1)]
        projective_dims = tuple(
            len(algebra.residue_paths(vertex, w)) for w in algebra.vertices
        )
        if module.dims == projective_dims:
            return 'P{}'.format(vertex)
    return 'M{}'.format(index)


class IndecCatalog(object):
    """The indecomposable modules of an algebra, up to isomorphism.

    ``items`` are sorted by total dimension, then by dimension vector.
    ``fingerprints[i][j]`` is ``dim Hom(items[i], items[j])``.

    """

    def __init__(self, algebra, items, dim_bound, seed=DEFAULT_SEED,
                 trials=DEFAULT_TRIALS, labels=None, fingerprints=None):
        self.algebra = algebra
        self.items = tuple(items)
        self.dim_bound = dim_bound
        self.seed = seed
        self.trials = trials
        if fingerprints is None:
            fingerprints = [[hom_dim(x, y) for y in self.items]
                            for x in self.items]
        self.fingerprints = tuple(tuple(row) for row in fingerprints)
        if labels is None:
            labels = [default_label(item, i) for i, item in enumerate(self.items)]
        self.labels = tuple(labels)
        self._decompositions = {}

    def __len__(self):
        return len(self.items)

    def __repr__(self):
        return 'IndecCatalog({} items)'.format(len(self.items))

    def relabel(self, labels):
        """Return a copy of this catalog carrying ``labels``."""
        return IndecCatalog(self.algebra, self.items, self.dim_bound, self.seed,
                            self.trials, labels, self.fingerprints)

    def index_of(self, label):
        """Return the index of the item labelled ``label``."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError('No catalog item is labelled {}.'.format(label))

    def select(self, selector):
        """Resolve a label or a comma separated dimension vector to an index."""
        selector = str(selector).strip()
        if selector in self.labels:
            return self.labels.index(selector)
        try:
            dims = tuple(int(part) for part in selector.split(','))
        except ValueError:
            raise ValidationError('Unknown selector {}.'.format(selector))
        matches = [i for i, item in enumerate(self.items) if item.dims == dims]
        if len(matches) != 1:
            raise ValidationError(
                'Selector {} matches {} catalog items.'.format(
                    selector, len(matches)
                )
            )
        return matches[0]

    def fingerprint(self, module):
        """Return ``(dim Hom(item, module))`` over all items."""
        return tuple(hom_dim(item, module) for item in self.items)

    def identify(self, module):
        """Return the index of the item isomorphic to an indecomposable."""
        if module.algebra is not self.algebra:
            raise PreconditionError('The module lives over another algebra.')
        candidates = [i for i, item in enumerate(self.items)
                      if item.dims == module.dims]
        if len(candidates) > 1:
            column = self.fingerprint(module)
            candidates = [
                i for i in candidates
                if column == tuple(row[i] for row in self.fingerprints)
            ]
            candidates = [
                i for i in candidates
                if _isomorphic_indecomposables(self.items[i], module)
            ]
        if not candidates:
            raise CatalogMiss(
                'No catalog item matches an indecomposable with dimension '
                'vector {}; raise the dimension bound.'.format(module.dims)
            )
        return candidates[0]

    def decompose(self, module):
        """Return the sorted tuple of item indices summing to ``module``."""
        key = module.key()
        if key not in self._decompositions:
            self._decompositions[key] = tuple(sorted(self._decompose(module)))
        return self._decompositions[key]

    def _decompose(self, module):
        if module.is_zero():
            return []
        if is_indecomposable(module, self.seed, self.trials):
            return [self.identify(module)]
        parts = _split(module, self.seed, self.trials)
        if parts is None:
            raise AmbiguousResult(
                'No splitting endomorphism found after {} trials.'.format(
                    self.trials
                )
            )
        return list(self.decompose(parts[0])) + list(self.decompose(parts[1]))

    def names(self, indices):
        """Return the labels of ``indices``."""
        return [self.labels[i] for i in indices]


def decompose(module, catalog):
    """Return the multiset of catalog indices whose sum is ``module``.

    >>> from quiverlab import factories, quiver
    >>> catalog = factories.a2_catalog()
    >>> catalog.names(decompose(quiver.regular_module(catalog.algebra), catalog))
    ['S2', 'P1']

    """
    return catalog.decompose(module)


def _cocycles(module, vertex):
    """Return a basis of ``Ext^1(S_vertex, module)`` as cocycle vectors.

    A cocycle assigns to every arrow ``a`` leaving ``vertex`` a vector
    ``c_a`` in ``module`` at the target of ``a``, subject to the relations
    starting at ``vertex``. Coboundaries are ``c_a = M_a u``.

    The result is ``(arrows, basis)`` where each basis element is a list of
    vectors, one per arrow in ``arrows``.

    """
    algebra = module.algebra
    field = algebra.field
    arrows = algebra.quiver.arrows_from(vertex)
    sizes = [module.dim(arrow.target) for arrow in arrows]
    total = sum(sizes)
    if total == 0:
        return arrows, []
    offsets = list(itertools.accumulate([0] + sizes[:-1]))
    position = {arrow.name: i for i, arrow in enumerate(arrows)}
    constraints = []
    for relation in algebra.relations:
        if relation.source != vertex:
            continue
        block = field.zeros(module.dim(relation.target), total)
        for coeff, path in relation.terms:
            i = position[path[0]]
            action = module.path_matrix(path[1:], source=arrows[i].target)
            block[:, offsets[i]:offsets[i] + sizes[i]] = field.add(
                block[:, offsets[i]:offsets[i] + sizes[i]],
                field.scale(coeff, action),
            )
        constraints.append(block)
    system = np.concatenate(constraints, axis=0) if constraints else \
        field.zeros(0, total)
    cocycles = field.kernel_basis(system)
    coboundaries = np.concatenate(
        [module.mat(arrow.name) for arrow in arrows], axis=0
    )
    coords = field.solve_matrix(cocycles, coboundaries)
    _, reps = field.quotient_basis(coords, cocycles.shape[1])
    classes = field.mul(cocycles, reps)
    basis = []
    for j in range(classes.shape[1]):
        basis.append([classes[offsets[i]:offsets[i] + sizes[i], j]
                      for i in range(len(arrows))])
    return arrows, basis


def one_point_extension(vertex, parts):
    """Return the module ``M`` with ``0 -> K -> M -> S_vertex -> 0``.

    ``parts`` is a list of ``(module, cocycle_basis, form)``: ``form`` is an
    ``e x m`` matrix whose columns pick ``m`` cocycles for ``m`` copies of
    ``module``. ``K`` is the direct sum of all copies.

    """
    copies = []
    cocycles = []
    for module, basis, form in parts:
        for j in range(form.shape[1]):
            copies.append(module)
            combination = None
            for l, cocycle in enumerate(basis):
                scaled = [int(form[l, j]) * vector for vector in cocycle]
                combination = scaled if combination is None else [
                    a + b for a, b in zip(combination, scaled)
                ]
            cocycles.append(combination)
    base = direct_sum(*copies)
    algebra = base.algebra
    field = algebra.field
    index = algebra.quiver.vertex_index(vertex)
    dims = list(base.dims)
    dims[index] += 1
    outgoing = [arrow.name for arrow in algebra.quiver.arrows_from(vertex)]
    mats = {}
    for arrow in algebra.arrows:
        matrix = base.mat(arrow.name)
        if arrow.source == vertex:
            i = outgoing.index(arrow.name)
            column = np.concatenate([cocycle[i] for cocycle in cocycles])
            matrix = np.concatenate(
                [matrix, np.mod(column, field.prime).reshape(-1, 1)], axis=1
            )
        elif arrow.target == vertex:
            matrix = np.concatenate(
                [matrix, field.zeros(1, matrix.shape[1])], axis=0
            )
        mats[arrow.name] = matrix
    return Representation(algebra, dims, mats)


def _multisets(candidates, remaining, limits):
    """Yield ``{index: multiplicity}`` choices over ``candidates``.

    ``remaining`` is the per-vertex dimension budget and ``limits`` the maximal
    multiplicity of each candidate.

    """
    if not candidates:
        yield {}
        return
    (index, module), rest = candidates[0], candidates[1:]
    for mult in range(limits[index] + 1):
        used = tuple(mult * dim for dim in module.dims)
        if any(u > r for u, r in zip(used, remaining)):
            break
        left = tuple(r - u for r, u in zip(remaining, used))
        for choice in _multisets(rest, left, limits):
            if mult:
                choice = dict(choice)
                choice[index] = mult
            yield choice


def enumerate_indecomposables(algebra, dim_bound=DEFAULT_DIM_BOUND,
                              budget=DEFAULT_BUDGET, seed=DEFAULT_SEED,
                              trials=DEFAULT_TRIALS):
    """Return the catalog of indecomposables with every vertex dimension at
    most ``dim_bound``.

    Every indecomposable ``M`` of dimension at least two has a submodule ``K``
    of codimension one with ``M / K`` simple, say ``S_v``. ``K`` is a sum of
    smaller indecomposables ``K_i`` with multiplicities ``m_i``, and ``M`` is
    determined by a class in ``Ext^1(S_v, K)``; it can only be
    indecomposable if the component of that class at ``K_i`` has rank ``m_i``.
    Such classes are enumerated up to the action of ``GL(m_i)``, so each
    candidate is picked by one reduced column echelon form per ``K_i``. The
    candidates are filtered by ``is_indecomposable`` and deduplicated up to
    isomorphism.

    ``budget`` caps the number of candidates built.

    >>> from quiverlab import factories
    >>> [item.dims for item in factories.a2_catalog().items]
    [(0, 1), (1, 0), (1, 1)]

    """
    if dim_bound < 1:
        raise PreconditionError('The dimension bound must be at least 1.')
    field = algebra.field
    vertices = algebra.vertices
    items = []
    for i, vertex in enumerate(vertices):
        dims = [0] * len(vertices)
        dims[i] = 1
        items.append(Representation(algebra, dims, {}, check=False))
    cocycles = {}
    work = 0
    for size in range(2, dim_bound * len(vertices) + 1):
        found = []
        for position, vertex in enumerate(vertices):
            for i, item in enumerate(items):
                if (i, vertex) not in cocycles:
                    cocycles[(i, vertex)] = _cocycles(item, vertex)[1]
            limits = {i: len(cocycles[(i, vertex)])
                      for i in range(len(items))}
            candidates = [(i, item) for i, item in enumerate(items)
                          if limits[i] and item.dimension < size]
            remaining = [dim_bound] * len(vertices)
            remaining[position] -= 1
            for choice in _multisets(candidates, tuple(remaining), limits):
                if sum(items[i].dimension * m for i, m in choice.items()) \
                        != size - 1:
                    continue
                ordered = sorted(choice.items())
                forms = [
                    list(field.column_echelon_forms(limits[i], m))
                    for i, m in ordered
                ]
                count = int(np.prod([len(f) for f in forms]))
                work += count
                if work > budget:
                    raise BoundsExceeded(
                        'Enumeration budget of {} candidates exceeded.'.format(
                            budget
                        )
                    )
                for picked in itertools.product(*forms):
                    module = one_point_extension(vertex, [
                        (items[i], cocycles[(i, vertex)], form)
                        for (i, _), form in zip(ordered, picked)
                    ])
                    if not is_indecomposable(module, seed, trials):
                        continue
                    if any(
                            known.dims == module.dims
                            and _isomorphic_indecomposables(known, module)
                            for known in found):
                        continue
                    found.append(module)
        if found:
            logger.info('found %d indecomposables of dimension %d',
                        len(found), size)
        items.extend(found)
    items.sort(key=lambda item: (item.dimension, item.dims))
    logger.info('enumerated %d indecomposables (dimension bound %d, %d '
                'candidates)', len(items), dim_bound, work)
    return IndecCatalog(algebra, items, dim_bound, seed, trials)
