"""Projective covers, syzygies and extensions.

Ext is computed from minimal projective resolutions: ``Ext^k(Z, X)`` is
``Ext^1(W, X)`` for the ``(k-1)``-st syzygy ``W`` of ``Z``, and ``Ext^1(W, X)``
is the cokernel of ``Hom(P, X) -> Hom(Omega W, X)`` where ``P`` is the
projective cover of ``W``.

A short exact sequence ``0 -> A -> B -> C -> 0`` is a ``Conflation``.

"""
from collections import namedtuple
import functools
import logging

import numpy as np

from quiverlab import quiver, rep
from quiverlab.exceptions import BoundsExceeded, PreconditionError

logger = logging.getLogger(__name__)

DEFAULT_EXT_CAP = 10 ** 4

ExtClass = namedtuple('ExtClass', ('degree', 'base', 'cocycle'))
ExtClass.__doc__ = """An element of ``Ext^1(Z, X)``.

``base`` is ``(Z, X)`` and ``cocycle`` a morphism ``syzygy(Z) -> X``, taken
modulo the restrictions of morphisms from the projective cover of ``Z``.

"""


class Conflation(namedtuple('Conflation', ('inflation', 'deflation'))):
    """A short exact sequence, given by its two maps."""

    __slots__ = ()

    @property
    def sub(self):
        """The first term."""
        return self.inflation.source

    @property
    def middle(self):
        """The middle term."""
        return self.inflation.target

    @property
    def quotient(self):
        """The last term."""
        return self.deflation.target

    def is_exact(self):
        """Tell whether the sequence is short exact."""
        if self.inflation.target != self.deflation.source:
            return False
        return self.inflation.is_injective() and \
            self.deflation.is_surjective() and \
            self.deflation.compose(self.inflation).is_zero() and \
            all(a + c == b for a, b, c in zip(
                self.sub.dims, self.middle.dims, self.quotient.dims
            ))


@functools.lru_cache(maxsize=4096)
def projective_cover(module):
    """Return ``(P, epi)``, the projective cover of ``module``.

    ``P`` is the sum over vertices ``v`` of ``t_v`` copies of ``P_v``, where
    ``t_v`` is the dimension of the top at ``v``; copies are ordered by vertex.
    The copy belonging to a top vector ``x`` maps the residue path ``q`` to
    ``M(q) x``.

    >>> from quiverlab import factories
    >>> cover, epi = projective_cover(factories.a2_module('S1'))
    >>> cover == factories.a2_module('P1'), epi.is_surjective()
    (True, True)

    """
    algebra = module.algebra
    field = algebra.field
    tops = rep.top_basis(module)
    summands = []
    for vertex, top in zip(algebra.vertices, tops):
        for j in range(top.shape[1]):
            summands.append((vertex, top[:, j]))
    if not summands:
        zero = rep.zero_module(algebra)
        return zero, rep.Morphism.zero(zero, module)
    cover = rep.direct_sum(*[
        quiver.projective_module(algebra, vertex) for vertex, _ in summands
    ])
    mats = []
    for target in algebra.vertices:
        columns = []
        for vertex, vector in summands:
            for path in algebra.residue_paths(vertex, target):
                columns.append(field.mul(
                    module.path_matrix(path, source=vertex), vector
                ))
        if columns:
            mats.append(np.stack(columns, axis=1))
        else:
            mats.append(field.zeros(module.dim(target), 0))
    return cover, rep.Morphism(cover, module, mats)


def syzygy(module):
    """Return ``(Omega, inclusion)``, the kernel of the projective cover.

    >>> from quiverlab import factories
    >>> syzygy(factories.a2_module('S1'))[0] == factories.a2_module('S2')
    True
    >>> syzygy(factories.a2_module('P1'))[0].is_zero()
    True

    """
    return rep.kernel(projective_cover(module)[1])


def is_projective(module):
    """Tell whether ``module`` is projective."""
    return syzygy(module)[0].is_zero()


@functools.lru_cache(maxsize=16384)
def ext_dim(degree, source, target):
    """Return ``dim Ext^degree(source, target)``.

    >>> from quiverlab import factories
    >>> s1, s2 = factories.a2_module('S1'), factories.a2_module('S2')
    >>> ext_dim(1, s1, s2), ext_dim(1, s2, s1), ext_dim(2, s1, s2)
    (1, 0, 0)

    """
    if degree < 1:
        raise PreconditionError('Ext degree must be at least 1.')
    module = source
    for _ in range(degree - 1):
        module = syzygy(module)[0]
    if module.is_zero():
        return 0
    cover = projective_cover(module)[0]
    omega = syzygy(module)[0]
    return rep.hom_dim(omega, target) - rep.hom_dim(cover, target) + \
        rep.hom_dim(module, target)


def _flatten(morphism):
    """Return the entries of ``morphism`` as one vector."""
    parts = [matrix.reshape(-1) for matrix in morphism.mats]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


@functools.lru_cache(maxsize=4096)
def ext1_basis(source, target):
    """Return a basis of ``Ext^1(source, target)`` as ``ExtClass`` tuples.

    >>> from quiverlab import factories
    >>> s1, s2 = factories.a2_module('S1'), factories.a2_module('S2')
    >>> len(ext1_basis(s1, s2)), len(ext1_basis(s2, s1))
    (1, 0)

    """
    field = source.field
    cover, _ = projective_cover(source)
    omega, inclusion = syzygy(source)
    cocycles = rep.hom_basis(omega, target)
    if not cocycles:
        return ()
    vectors = np.stack([_flatten(f) for f in cocycles], axis=1)
    coboundaries = [
        field.solve(vectors, _flatten(g.compose(inclusion)))
        for g in rep.hom_basis(cover, target)
    ]
    span = np.stack(coboundaries, axis=1) if coboundaries else \
        field.zeros(len(cocycles), 0)
    _, reps = field.quotient_basis(span, len(cocycles))
    classes = []
    for j in range(reps.shape[1]):
        cocycle = rep.linear_combination(reps[:, j], list(cocycles))
        classes.append(ExtClass(1, (source, target), cocycle))
    return tuple(classes)


def combine(coeffs, classes):
    """Return the class ``sum(c * xi)`` for classes with a common base."""
    base = classes[0].base
    cocycle = rep.linear_combination(coeffs, [xi.cocycle for xi in classes])
    return ExtClass(1, base, cocycle)


def injection(first, second):
    """Return the inclusion of ``first`` into ``first + second``."""
    return rep.vstack([rep.Morphism.identity(first),
                       rep.Morphism.zero(first, second)])


def injection_second(first, second):
    """Return the inclusion of ``second`` into ``first + second``."""
    return rep.vstack([rep.Morphism.zero(second, first),
                       rep.Morphism.identity(second)])


def projection(first, second):
    """Return the projection of ``first + second`` onto ``first``."""
    return rep.hstack([rep.Morphism.identity(first),
                       rep.Morphism.zero(second, first)])


def projection_second(first, second):
    """Return the projection of ``first + second`` onto ``second``."""
    return rep.hstack([rep.Morphism.zero(first, second),
                       rep.Morphism.identity(second)])


Square = namedtuple('Square', ('corner', 'first', 'second', 'universal'))
Square.__doc__ = """A pushout or pullback square.

``first`` and ``second`` connect the two given ends with ``corner``.
``universal`` is the cokernel projection ``A + B -> corner`` of a pushout, or
the kernel inclusion ``corner -> A + B`` of a pullback.

"""


def pushout(left, right):
    """Return the pushout ``Square`` of ``A <- C -> B``.

    ``left: C -> A`` and ``right: C -> B``; the corner is the cokernel of
    ``(left, -right): C -> A + B``.

    """
    first, second = left.target, right.target
    corner, proj = rep.cokernel(rep.vstack([left, -right]))
    return Square(
        corner,
        proj.compose(injection(first, second)),
        proj.compose(injection_second(first, second)),
        proj,
    )


def pullback(left, right):
    """Return the pullback ``Square`` of ``A -> C <- B``.

    The corner is the kernel of ``(left, -right): A + B -> C``.

    """
    first, second = left.source, right.source
    corner, incl = rep.kernel(rep.hstack([left, -right]))
    return Square(
        corner,
        projection(first, second).compose(incl),
        projection_second(first, second).compose(incl),
        incl,
    )


def realize(ext_class):
    """Return the conflation ``X -> E -> Z`` representing ``ext_class``.

    ``E`` is the pushout of ``Omega Z -> P`` along the cocycle.

    >>> from quiverlab import factories
    >>> s1, s2 = factories.a2_module('S1'), factories.a2_module('S2')
    >>> sequence = realize(ext1_basis(s1, s2)[0])
    >>> sequence.middle.dims, sequence.is_exact()
    ((1, 1), True)

    """
    source, target = ext_class.base
    _, epi = projective_cover(source)
    _, inclusion = syzygy(source)
    square = pushout(ext_class.cocycle, inclusion)
    deflation = rep.descend(
        square.universal,
        rep.hstack([rep.Morphism.zero(target, source), epi]),
    )
    return Conflation(square.first, deflation)


def split_conflation(sub, quotient):
    """Return the split conflation ``sub -> sub + quotient -> quotient``."""
    return Conflation(injection(sub, quotient), projection_second(sub, quotient))


def compose_extension(conflations):
    """Return the conflation for a sum of classes with a common first term.

    Given ``X -> E_i -> Z_i``, the result is ``X -> E -> Z_1 + ... + Z_n``: the
    pushout of ``X^n -> E_1 + ... + E_n`` along the codiagonal ``X^n -> X``.

    """
    if len(conflations) == 1:
        return conflations[0]
    sub = conflations[0].sub
    inflations = rep.diagonal([c.inflation for c in conflations])
    codiagonal = rep.hstack([rep.Morphism.identity(sub)] * len(conflations))
    square = pushout(codiagonal, inflations)
    deflations = rep.diagonal([c.deflation for c in conflations])
    deflation = rep.descend(square.universal, rep.hstack([
        rep.Morphism.zero(sub, deflations.target), deflations
    ]))
    return Conflation(square.first, deflation)


def compose_coextension(conflations):
    """Return the conflation for a sum of classes with a common last term.

    Given ``X_i -> E_i -> Z``, the result is ``X_1 + ... + X_n -> E -> Z``:
    the pullback of ``E_1 + ... + E_n -> Z^n`` along the diagonal ``Z -> Z^n``.

    """
    if len(conflations) == 1:
        return conflations[0]
    quotient = conflations[0].quotient
    deflations = rep.diagonal([c.deflation for c in conflations])
    diagonal = rep.vstack([rep.Morphism.identity(quotient)] * len(conflations))
    square = pullback(deflations, diagonal)
    inflations = rep.diagonal([c.inflation for c in conflations])
    inflation = rep.lift(square.universal, rep.vstack([
        inflations, rep.Morphism.zero(inflations.source, quotient)
    ]))
    return Conflation(inflation, square.second)


def ext1_middle_terms(source, target, cap=DEFAULT_EXT_CAP, catalog=None):
    """Return the middle terms ``E`` of all conflations ``target -> E -> source``.

    Classes that differ by a nonzero scalar have isomorphic middle terms, so
    the zero class and one class per line of ``Ext^1(source, target)`` are
    realized: ``(p^e - 1) / (p - 1) + 1`` of them, which must not exceed
    ``cap``. Middle terms are returned up to isomorphism, the split one first.

    >>> from quiverlab import factories
    >>> s1, s2 = factories.a2_module('S1'), factories.a2_module('S2')
    >>> [e.dims for e in ext1_middle_terms(s1, s2)]
    [(1, 1), (1, 1)]
    >>> len(ext1_middle_terms(s2, s1))
    1

    """
    field = source.field
    basis = ext1_basis(source, target)
    count = (field.prime ** len(basis) - 1) // (field.prime - 1) + 1
    if count > cap:
        raise BoundsExceeded(
            'Ext^1 has {} classes up to scalars, above the cap of {}.'.format(
                count, cap
            )
        )
    terms = [rep.direct_sum(target, source)]
    keys = []
    if catalog is not None:
        keys.append(catalog.decompose(terms[0]))
    if basis:
        for form in field.column_echelon_forms(len(basis), 1):
            middle = realize(combine(form[:, 0], list(basis))).middle
            if catalog is not None:
                key = catalog.decompose(middle)
                if key in keys:
                    continue
                keys.append(key)
            elif any(rep.are_isomorphic(middle, known) for known in terms):
                continue
            terms.append(middle)
    return terms


@functools.lru_cache(maxsize=64)
def projective_dimension(module):
    """Return the length of the minimal projective resolution of ``module``."""
    length = 0
    current = module
    while True:
        omega = syzygy(current)[0]
        if omega.is_zero():
            return length
        length += 1
        current = omega


@functools.lru_cache(maxsize=64)
def global_dimension(algebra):
    """Return the global dimension: the largest projective dimension of a
    simple module.

    >>> from quiverlab import factories
    >>> global_dimension(factories.a2_algebra())
    1
    >>> global_dimension(factories.square_algebra())
    2

    """
    result = 0
    for vertex in algebra.vertices:
        result = max(result,
                     projective_dimension(quiver.simple_module(algebra, vertex)))
    logger.debug('global dimension of %r is %d', algebra, result)
    return result


def cover_conflation(module):
    """Return ``Omega -> P -> module`` from the projective cover."""
    _, epi = projective_cover(module)
    _, inclusion = syzygy(module)
    return Conflation(inclusion, epi)


def probe_conflations(catalog):
    """Return conflations for probing functors over ``catalog``.

    These are the projective cover sequences of the items that are not
    projective, and one nonsplit conflation per basis class of ``Ext^1``
    between items.

    """
    result = []
    for item in catalog.items:
        if not is_projective(item):
            result.append(cover_conflation(item))
    for quotient in catalog.items:
        for sub in catalog.items:
            for ext_class in ext1_basis(quotient, sub):
                result.append(realize(ext_class))
    return result


def euler_defect(conflation, test, top_degree):
    """Return the alternating sum of the long exact ``Hom(test, -)`` sequence.

    The sequence stops after ``Ext^top_degree``, so the result is zero when
    ``top_degree`` is at least the global dimension.

    """
    total = 0
    terms = (conflation.sub, conflation.middle, conflation.quotient)
    for degree in range(top_degree + 1):
        for position, module in enumerate(terms):
            if degree == 0:
                value = rep.hom_dim(test, module)
            else:
                value = ext_dim(degree, test, module)
            total += (-1) ** (3 * degree + position) * value
    return total
