"""The recollement of module categories over a triangular matrix algebra.

For an algebra ``A`` let ``B`` be the algebra of upper triangular 2x2 matrices
over ``A``. A ``B``-module is a triple ``(X, Y, f)`` of ``A``-modules with
``f: Y -> X``; see ``quiver.triangular_spec`` for how ``B`` is presented. The
six functors relating ``mod A``, ``mod B`` and ``mod A`` are::

    i^*(X, Y, f) = Coker f        j_!(Y) = (Y, Y, 1)
    i_*(X)       = (X, 0, 0)      j^*(X, Y, f) = Y
    i^!(X, Y, f) = X              j_*(Y) = (0, Y, 0)

They form the adjoint triples ``i^* -| i_* -| i^!`` and ``j_! -| j^* -| j_*``.

The three categories are called ``a``, ``b`` and ``c`` after their positions
in the recollement diagram; ``a`` and ``c`` are both ``mod A``.

"""
from collections import namedtuple
import logging

import numpy as np

from quiverlab import homology, quiver, rep, subcat
from quiverlab.exceptions import PreconditionError
from quiverlab.reports import Report

logger = logging.getLogger(__name__)

I_UPPER_STAR = 'i_upper_star'
I_LOWER_STAR = 'i_lower_star'
I_UPPER_SHRIEK = 'i_upper_shriek'
J_LOWER_SHRIEK = 'j_lower_shriek'
J_UPPER_STAR = 'j_upper_star'
J_LOWER_STAR = 'j_lower_star'
FUNCTORS = (I_UPPER_STAR, I_LOWER_STAR, I_UPPER_SHRIEK,
            J_LOWER_SHRIEK, J_UPPER_STAR, J_LOWER_STAR)

THICK = 'thick'
EXTENSION = 'extension'

Triple = namedtuple('Triple', ('x', 'y', 'f'))
Triple.__doc__ = """A ``B``-module as ``A``-modules ``x``, ``y`` and ``f: y -> x``."""

Functor = namedtuple('Functor', ('source', 'target', 'on_object', 'on_morphism'))
Functor.__doc__ = """A functor between two of the categories ``a``, ``b``, ``c``.

``on_object(ctx, module)`` and ``on_morphism(ctx, morphism)`` compute it.

"""

Adjunction = namedtuple('Adjunction', ('left', 'right', 'unit', 'counit'))
Adjunction.__doc__ = """An adjoint pair ``left -| right``.

``unit(ctx, d)`` is ``d -> right(left(d))`` and ``counit(ctx, e)`` is
``left(right(e)) -> e``.

"""


# object and morphism actions

def _i_upper_star(ctx, module):
    triple = ctx.to_triple(module)
    return rep.cokernel(triple.f)[0]


def _i_upper_star_map(ctx, morphism):
    gx, _ = ctx.to_pair(morphism)
    source = ctx.to_triple(morphism.source)
    target = ctx.to_triple(morphism.target)
    proj = rep.cokernel(source.f)[1]
    target_proj = rep.cokernel(target.f)[1]
    return rep.descend(proj, target_proj.compose(gx))


def _i_lower_star(ctx, module):
    zero = rep.zero_module(module.algebra)
    return ctx.from_triple(module, zero, rep.Morphism.zero(zero, module))


def _i_lower_star_map(ctx, morphism):
    zero = rep.zero_module(morphism.source.algebra)
    return ctx.from_pair(
        _i_lower_star(ctx, morphism.source),
        _i_lower_star(ctx, morphism.target),
        morphism,
        rep.Morphism.zero(zero, zero),
    )


def _i_upper_shriek(ctx, module):
    return ctx.to_triple(module).x


def _i_upper_shriek_map(ctx, morphism):
    return ctx.to_pair(morphism)[0]


def _j_lower_shriek(ctx, module):
    return ctx.from_triple(module, module, rep.Morphism.identity(module))


def _j_lower_shriek_map(ctx, morphism):
    return ctx.from_pair(
        _j_lower_shriek(ctx, morphism.source),
        _j_lower_shriek(ctx, morphism.target),
        morphism,
        morphism,
    )


def _j_upper_star(ctx, module):
    return ctx.to_triple(module).y


def _j_upper_star_map(ctx, morphism):
    return ctx.to_pair(morphism)[1]


def _j_lower_star(ctx, module):
    zero = rep.zero_module(module.algebra)
    return ctx.from_triple(zero, module, rep.Morphism.zero(module, zero))


def _j_lower_star_map(ctx, morphism):
    zero = rep.zero_module(morphism.source.algebra)
    return ctx.from_pair(
        _j_lower_star(ctx, morphism.source),
        _j_lower_star(ctx, morphism.target),
        rep.Morphism.zero(zero, zero),
        morphism,
    )


DEFAULT_FUNCTORS = {
    I_UPPER_STAR: Functor('b', 'a', _i_upper_star, _i_upper_star_map),
    I_LOWER_STAR: Functor('a', 'b', _i_lower_star, _i_lower_star_map),
    I_UPPER_SHRIEK: Functor('b', 'a', _i_upper_shriek, _i_upper_shriek_map),
    J_LOWER_SHRIEK: Functor('c', 'b', _j_lower_shriek, _j_lower_shriek_map),
    J_UPPER_STAR: Functor('b', 'c', _j_upper_star, _j_upper_star_map),
    J_LOWER_STAR: Functor('c', 'b', _j_lower_star, _j_lower_star_map),
}


# units and counits, as morphisms of triples

def _eta_i(ctx, module):
    """``M -> i_* i^* M``, the projection onto ``Coker f``."""
    target = ctx.apply(I_LOWER_STAR, ctx.apply(I_UPPER_STAR, module))
    proj = rep.cokernel(ctx.to_triple(module).f)[1]
    return ctx.from_pair(module, target, proj, _zero_pair(ctx, module, target))


def _counit_i_upper_star(ctx, module):
    """``i^* i_* X -> X``; ``Coker(0 -> X)`` is ``X`` itself."""
    source = ctx.apply(I_UPPER_STAR, ctx.apply(I_LOWER_STAR, module))
    return rep.Morphism(source, module, [
        module.field.identity(dim) for dim in module.dims
    ])


def _unit_i_lower_star(ctx, module):
    target = ctx.apply(I_UPPER_SHRIEK, ctx.apply(I_LOWER_STAR, module))
    return rep.Morphism(module, target, [
        module.field.identity(dim) for dim in module.dims
    ])


def _theta(ctx, module):
    """``i_* i^! M -> M``, the identity on the ``x`` part."""
    source = ctx.apply(I_LOWER_STAR, ctx.apply(I_UPPER_SHRIEK, module))
    triple = ctx.to_triple(module)
    return ctx.from_pair(source, module, rep.Morphism.identity(triple.x),
                         _zero_pair(ctx, source, module))


def _unit_j_lower_shriek(ctx, module):
    target = ctx.apply(J_UPPER_STAR, ctx.apply(J_LOWER_SHRIEK, module))
    return rep.Morphism(module, target, [
        module.field.identity(dim) for dim in module.dims
    ])


def _counit_j_lower_shriek(ctx, module):
    """``j_! j^* M -> M``, which is ``f`` on the ``x`` part."""
    source = ctx.apply(J_LOWER_SHRIEK, ctx.apply(J_UPPER_STAR, module))
    triple = ctx.to_triple(module)
    return ctx.from_pair(source, module, triple.f,
                         rep.Morphism.identity(triple.y))


def _vartheta(ctx, module):
    """``M -> j_* j^* M``, the identity on the ``y`` part."""
    target = ctx.apply(J_LOWER_STAR, ctx.apply(J_UPPER_STAR, module))
    triple = ctx.to_triple(module)
    return ctx.from_pair(module, target,
                         _zero_x(ctx, module, target),
                         rep.Morphism.identity(triple.y))


def _counit_j_lower_star(ctx, module):
    source = ctx.apply(J_UPPER_STAR, ctx.apply(J_LOWER_STAR, module))
    return rep.Morphism(source, module, [
        module.field.identity(dim) for dim in module.dims
    ])


def _zero_pair(ctx, source, target):
    return rep.Morphism.zero(ctx.to_triple(source).y, ctx.to_triple(target).y)


def _zero_x(ctx, source, target):
    return rep.Morphism.zero(ctx.to_triple(source).x, ctx.to_triple(target).x)


ADJUNCTIONS = {
    'i_upper_star-i_lower_star': Adjunction(
        I_UPPER_STAR, I_LOWER_STAR, _eta_i, _counit_i_upper_star),
    'i_lower_star-i_upper_shriek': Adjunction(
        I_LOWER_STAR, I_UPPER_SHRIEK, _unit_i_lower_star, _theta),
    'j_lower_shriek-j_upper_star': Adjunction(
        J_LOWER_SHRIEK, J_UPPER_STAR, _unit_j_lower_shriek,
        _counit_j_lower_shriek),
    'j_upper_star-j_lower_star': Adjunction(
        J_UPPER_STAR, J_LOWER_STAR, _vartheta, _counit_j_lower_star),
}


class RecollementContext(object):
    """The three categories of a recollement and the six functors."""

    def __init__(self, algebra_a, algebra_b, a, b, c, functors=None):
        self.algebra_a = algebra_a
        self.algebra_b = algebra_b
        self.a = a
        self.b = b
        self.c = c
        self.functors = dict(DEFAULT_FUNCTORS)
        if functors:
            unknown = set(functors) - set(FUNCTORS)
            if unknown:
                raise PreconditionError('Unknown functors: {}.'.format(
                    ', '.join(sorted(unknown))
                ))
            self.functors.update(functors)

    def __repr__(self):
        return 'RecollementContext({!r}, {!r}, {!r})'.format(
            self.a, self.b, self.c
        )

    def with_functors(self, **functors):
        """Return a copy with some functors replaced."""
        merged = dict(self.functors)
        merged.update(functors)
        return RecollementContext(self.algebra_a, self.algebra_b,
                                  self.a, self.b, self.c, merged)

    def side(self, name):
        """Return the context called ``a``, ``b`` or ``c``."""
        return {'a': self.a, 'b': self.b, 'c': self.c}[name]

    def algebra(self, name):
        """Return the algebra of the category ``a``, ``b`` or ``c``."""
        return self.algebra_b if name == 'b' else self.algebra_a

    def apply(self, which, value):
        """Apply the functor ``which`` to a module or a morphism."""
        return apply_functor(self, which, value)

    # triples

    def _name(self, copy, name):
        return '{}.{}'.format(copy, name)

    def to_triple(self, module):
        """Return the ``Triple`` of a ``B``-module."""
        if module.algebra is not self.algebra_b:
            raise PreconditionError('Triples describe modules over B only.')
        algebra = self.algebra_a
        sides = []
        for copy in (quiver.TOP_COPY, quiver.BOTTOM_COPY):
            sides.append(rep.Representation(
                algebra,
                [module.dim(self._name(copy, v)) for v in algebra.vertices],
                {arrow.name: module.mat(self._name(copy, arrow.name))
                 for arrow in algebra.arrows},
                check=False,
            ))
        join = rep.Morphism(sides[1], sides[0], [
            module.mat(self._name(quiver.JOIN, v)) for v in algebra.vertices
        ], check=False)
        return Triple(sides[0], sides[1], join)

    def from_triple(self, x, y, f):
        """Return the ``B``-module of the triple ``(x, y, f)``."""
        if f.source != y or f.target != x:
            raise PreconditionError('f must be a morphism y -> x.')
        sides = {quiver.TOP_COPY: x, quiver.BOTTOM_COPY: y}
        dims = []
        for vertex in self.algebra_b.vertices:
            copy, name = vertex.split('.', 1)
            dims.append(sides[copy].dim(name))
        mats = {}
        for arrow in self.algebra_b.arrows:
            copy, name = arrow.name.split('.', 1)
            if copy == quiver.JOIN:
                mats[arrow.name] = f.mat(name)
            else:
                mats[arrow.name] = sides[copy].mat(name)
        return rep.Representation(self.algebra_b, dims, mats, check=False)

    def to_pair(self, morphism):
        """Return ``(g_x, g_y)`` for a morphism of ``B``-modules."""
        source = self.to_triple(morphism.source)
        target = self.to_triple(morphism.target)
        algebra = self.algebra_a
        pair = []
        for copy, (src, tgt) in zip(
                (quiver.TOP_COPY, quiver.BOTTOM_COPY),
                ((source.x, target.x), (source.y, target.y))):
            pair.append(rep.Morphism(src, tgt, [
                morphism.mat(self._name(copy, v)) for v in algebra.vertices
            ], check=False))
        return tuple(pair)

    def from_pair(self, source, target, gx, gy):
        """Return the ``B``-morphism ``source -> target`` made of ``gx, gy``."""
        mats = []
        for vertex in self.algebra_b.vertices:
            copy, name = vertex.split('.', 1)
            part = gx if copy == quiver.TOP_COPY else gy
            mats.append(part.mat(name))
        return rep.Morphism(source, target, mats)

    def triple_label(self, index):
        """Return the triple label of ``B``-catalog item ``index``."""
        return triple_label(self, self.b.catalog.items[index])


def apply_functor(ctx, which, value):
    """Apply functor ``which`` of ``ctx`` to a module or morphism.

    >>> from quiverlab import factories
    >>> ctx = factories.a2_recollement()
    >>> s2 = ctx.a.catalog.items[0]
    >>> ctx.b.catalog.labels[ctx.b.decompose(
    ...     apply_functor(ctx, I_LOWER_STAR, s2))[0]]
    '(S2,0)'

    """
    try:
        functor = ctx.functors[which]
    except KeyError:
        raise PreconditionError('Unknown functor {}.'.format(which))
    module = value.source if isinstance(value, rep.Morphism) else value
    if module.algebra is not ctx.algebra(functor.source):
        raise PreconditionError('{} does not apply to this object.'.format(
            which
        ))
    if isinstance(value, rep.Morphism):
        return functor.on_morphism(ctx, value)
    return functor.on_object(ctx, value)


def unit_counit(ctx, adjunction, kind, module):
    """Return the ``unit`` or ``counit`` of ``adjunction`` at ``module``.

    ``adjunction`` names a key of ``ADJUNCTIONS``, such as
    ``'j_upper_star-j_lower_star'``.

    """
    try:
        data = ADJUNCTIONS[adjunction]
    except KeyError:
        raise PreconditionError('Unknown adjunction {}.'.format(adjunction))
    if kind == 'unit':
        expected = ctx.functors[data.left].source
        builder = data.unit
    elif kind == 'counit':
        expected = ctx.functors[data.left].target
        builder = data.counit
    else:
        raise PreconditionError('kind must be "unit" or "counit".')
    if module.algebra is not ctx.algebra(expected):
        raise PreconditionError('The object lies in the wrong category.')
    return builder(ctx, module)


def _side_label(catalog, module):
    if module.is_zero():
        return '0'
    return '+'.join(catalog.labels[i] for i in catalog.decompose(module))


def triple_label(ctx, module):
    """Return the triple label of a ``B``-module: ``(X,Y)``, ``(X,Y)_1``,
    ``(X,Y)_0`` or ``(X,Y)_f``."""
    triple = ctx.to_triple(module)
    catalog = ctx.a.catalog
    label = '({},{})'.format(_side_label(catalog, triple.x),
                             _side_label(catalog, triple.y))
    if triple.x.is_zero() or triple.y.is_zero():
        return label
    if triple.f.is_isomorphism():
        return label + '_1'
    if triple.f.is_zero():
        return label + '_0'
    return label + '_f'


def triangular_context(algebra, catalog=None, b_catalog=None,
                       dim_bound=rep.DEFAULT_DIM_BOUND,
                       budget=rep.DEFAULT_BUDGET, seed=rep.DEFAULT_SEED,
                       trials=rep.DEFAULT_TRIALS):
    """Return the recollement ``(mod A, mod B, mod A)`` for ``B = T2(A)``.

    Catalogs are enumerated unless given. The ``B`` catalog is relabelled
    with triple labels.

    """
    algebra_b = quiver.parse_algebra(quiver.triangular_spec(algebra.spec),
                                     prime=algebra.prime)
    if catalog is None:
        catalog = rep.enumerate_indecomposables(algebra, dim_bound, budget,
                                                seed, trials)
    if b_catalog is None:
        b_catalog = rep.enumerate_indecomposables(algebra_b, dim_bound,
                                                  budget, seed, trials)
    return context_from_catalogs(catalog, b_catalog)


def context_from_catalogs(catalog, b_catalog):
    """Return the full recollement context over two ready catalogs.

    The ``B`` catalog's algebra must be the triangular algebra of the ``A``
    catalog's algebra.

    """
    a = subcat.CategoryContext(catalog)
    provisional = RecollementContext(catalog.algebra, b_catalog.algebra, a,
                                     subcat.CategoryContext(b_catalog), a)
    labels = [triple_label(provisional, item) for item in b_catalog.items]
    b = subcat.CategoryContext(b_catalog.relabel(labels))
    logger.info('triangular context with %d + %d items', len(catalog.items),
                len(b_catalog.items))
    return RecollementContext(catalog.algebra, b_catalog.algebra, a, b, a)


def restricted_context(ctx, subcategory, require=THICK,
                       bounds=subcat.SearchBounds()):
    """Restrict ``ctx`` to a subcategory ``V`` of ``b`` containing ``i_* a``.

    The result has categories ``(a, V, j^* V)``; ``V`` and ``j^* V`` are
    handled as extension-closed subcategories. ``require`` is ``'thick'`` or
    ``'extension'`` and names the closure property demanded of ``V``.

    """
    if require == THICK:
        verdict = subcat.is_thick(subcategory, bounds)
    elif require == EXTENSION:
        verdict = subcat.is_extension_closed(subcategory, bounds)
    else:
        raise PreconditionError('require must be "thick" or "extension".')
    if not verdict.passed:
        raise PreconditionError('The subcategory is not {}-closed: {!r}.'.format(
            require, verdict.witness
        ))
    members = subcategory.members
    for index in sorted(ctx.a.universe):
        image = ctx.b.decompose(ctx.apply(I_LOWER_STAR, ctx.a.items[index]))
        if not set(image) <= members:
            raise PreconditionError(
                'i_* {} is not in the subcategory.'.format(ctx.a.label(index))
            )
    image = set()
    for index in sorted(members):
        image.update(ctx.c.decompose(ctx.apply(J_UPPER_STAR, ctx.b.items[index])))
    b = subcat.CategoryContext(ctx.b.catalog, members, subcat.EXTENSION_CLOSED,
                               bounds.ext_cap)
    c = subcat.CategoryContext(ctx.c.catalog, image, subcat.EXTENSION_CLOSED,
                               bounds.ext_cap)
    restricted = RecollementContext(ctx.algebra_a, ctx.algebra_b, ctx.a, b, c,
                                    ctx.functors)
    for which in (J_LOWER_SHRIEK, J_LOWER_STAR):
        for index in sorted(image):
            found = ctx.b.decompose(ctx.apply(which, ctx.c.items[index]))
            if not set(found) <= members:
                raise PreconditionError('{} {} leaves the subcategory.'.format(
                    which, ctx.c.label(index)
                ))
    return restricted


# verification

def _items(context):
    return [(i, context.items[i]) for i in sorted(context.universe)]


def _check(report, name, cases):
    """Record one check from ``(witness or None)`` values; the first
    witness found is kept."""
    for witness in cases:
        if witness is not None:
            report.add(name, False, witness)
            return
    report.add(name, True)


def _rank(morphisms):
    if not morphisms:
        return 0
    field = morphisms[0].field
    vectors = np.stack([
        np.concatenate([m.reshape(-1) for m in f.mats]) for f in morphisms
    ], axis=1)
    return field.rank(vectors)


def _adjunction_checks(ctx, report, name, data):
    left = ctx.functors[data.left]
    lower = ctx.side(left.source)
    upper = ctx.side(left.target)

    def hom_dims():
        for i, d in _items(lower):
            for j, e in _items(upper):
                first = rep.hom_dim(ctx.apply(data.left, d), e)
                second = rep.hom_dim(d, ctx.apply(data.right, e))
                if first != second:
                    yield {'source': lower.label(i), 'target': upper.label(j),
                           'dims': [first, second]}

    def triangles():
        for i, d in _items(lower):
            image = ctx.apply(data.left, d)
            composite = data.counit(ctx, image).compose(
                ctx.apply(data.left, data.unit(ctx, d))
            )
            if composite != rep.Morphism.identity(image):
                yield {'object': lower.label(i), 'identity': 'left'}
        for j, e in _items(upper):
            image = ctx.apply(data.right, e)
            composite = ctx.apply(data.right, data.counit(ctx, e)).compose(
                data.unit(ctx, image)
            )
            if composite != rep.Morphism.identity(image):
                yield {'object': upper.label(j), 'identity': 'right'}

    def naturality():
        for i, d in _items(lower):
            for j, d2 in _items(lower):
                for h in rep.hom_basis(d, d2):
                    first = data.unit(ctx, d2).compose(h)
                    second = ctx.apply(data.right, ctx.apply(data.left, h)) \
                        .compose(data.unit(ctx, d))
                    if first != second:
                        yield {'unit': [lower.label(i), lower.label(j)]}
        for i, e in _items(upper):
            for j, e2 in _items(upper):
                for h in rep.hom_basis(e, e2):
                    first = h.compose(data.counit(ctx, e))
                    second = data.counit(ctx, e2).compose(
                        ctx.apply(data.left, ctx.apply(data.right, h))
                    )
                    if first != second:
                        yield {'counit': [upper.label(i), upper.label(j)]}

    for check, cases in (('hom_dims', hom_dims), ('triangles', triangles),
                         ('naturality', naturality)):
        full = 'adjunction:{}:{}'.format(name, check)
        with report.guard(full):
            _check(report, full, cases())


def verify_recollement(ctx, objects=None):
    """Check the recollement axioms on catalog items and on ``objects``.

    ``objects`` are extra ``B``-modules for the object-wise checks; by default
    these run on the items of ``b``. Every group of checks that cannot even
    be computed, as with a malformed functor, is recorded as failed.

    """
    report = Report('recollement verify')
    b_objects = [(ctx.b.label(i), m) for i, m in _items(ctx.b)]
    for module in objects or []:
        b_objects.append(('+'.join(ctx.b.labels(ctx.b.decompose(module))),
                          module))
    for name in sorted(ADJUNCTIONS):
        _adjunction_checks(ctx, report, name, ADJUNCTIONS[name])

    with report.guard('R2:image_in_kernel'):
        _check(report, 'R2:image_in_kernel', (
            {'object': ctx.a.label(i)}
            for i, x in _items(ctx.a)
            if not ctx.apply(J_UPPER_STAR, ctx.apply(I_LOWER_STAR, x)).is_zero()
        ))
    with report.guard('R2:kernel_in_image'):
        _check(report, 'R2:kernel_in_image', (
            {'object': label}
            for label, m in b_objects
            if ctx.apply(J_UPPER_STAR, m).is_zero()
            and not unit_counit(ctx, 'i_lower_star-i_upper_shriek', 'counit',
                                m).is_isomorphism()
        ))

    for which, side in ((I_LOWER_STAR, ctx.a), (J_LOWER_SHRIEK, ctx.c),
                        (J_LOWER_STAR, ctx.c)):
        name = 'R3:fully_faithful:{}'.format(which)
        with report.guard(name):
            _check(report, name, _fully_faithful_cases(ctx, which, side))

    with report.guard('R4'):
        _check(report, 'R4', (
            {'object': label} for label, m in b_objects
            if not _left_sequence_exact(ctx, m)
        ))
    with report.guard('R5'):
        _check(report, 'R5', (
            {'object': label} for label, m in b_objects
            if not _right_sequence_exact(ctx, m)
        ))

    for name, inner, outer, side in (
            ('iso:j_upper_star-j_lower_star', J_LOWER_STAR, J_UPPER_STAR, ctx.c),
            ('iso:j_upper_star-j_lower_shriek', J_LOWER_SHRIEK, J_UPPER_STAR,
             ctx.c),
            ('iso:i_upper_star-i_lower_star', I_LOWER_STAR, I_UPPER_STAR, ctx.a),
            ('iso:i_upper_shriek-i_lower_star', I_LOWER_STAR, I_UPPER_SHRIEK,
             ctx.a)):
        with report.guard(name):
            _check(report, name, (
                {'object': side.label(i)} for i, m in _items(side)
                if not rep.are_isomorphic(
                    ctx.apply(outer, ctx.apply(inner, m)), m)
            ))
    for name, inner, outer in (
            ('zero:i_upper_star-j_lower_shriek', J_LOWER_SHRIEK, I_UPPER_STAR),
            ('zero:i_upper_shriek-j_lower_star', J_LOWER_STAR, I_UPPER_SHRIEK)):
        with report.guard(name):
            _check(report, name, (
                {'object': ctx.c.label(i)} for i, m in _items(ctx.c)
                if not ctx.apply(outer, ctx.apply(inner, m)).is_zero()
            ))

    if ctx.b.mode == subcat.FULL:
        for which, side in ((I_UPPER_STAR, ctx.b), (J_LOWER_SHRIEK, ctx.c)):
            name = 'projectives:{}'.format(which)
            with report.guard(name):
                _check(report, name, (
                    {'object': side.label(i)} for i, m in _items(side)
                    if homology.is_projective(m)
                    and not homology.is_projective(ctx.apply(which, m))
                ))

    for which in FUNCTORS:
        name = 'additive:{}'.format(which)
        with report.guard(name):
            _check(report, name, _additivity_cases(ctx, which))

    for which in (I_LOWER_STAR, J_UPPER_STAR, I_UPPER_SHRIEK, J_LOWER_SHRIEK):
        name = 'exact:{}'.format(which)
        with report.guard(name):
            _check(report, name, _exactness_cases(ctx, which))

    with report.guard('ext_identities'):
        _check(report, 'ext_identities', _ext_identity_cases(ctx))
    return report


def _fully_faithful_cases(ctx, which, side):
    for i, x in _items(side):
        for j, y in _items(side):
            basis = rep.hom_basis(x, y)
            images = [ctx.apply(which, h) for h in basis]
            target_dim = rep.hom_dim(ctx.apply(which, x), ctx.apply(which, y))
            if target_dim != len(basis) or _rank(images) != len(basis):
                yield {'source': side.label(i), 'target': side.label(j)}


def _left_sequence_exact(ctx, module):
    """``0 -> i_* i^! M -> M -> j_* j^* M`` is exact and ``j^*`` kills the
    cokernel of the last map."""
    theta = unit_counit(ctx, 'i_lower_star-i_upper_shriek', 'counit', module)
    vartheta = unit_counit(ctx, 'j_upper_star-j_lower_star', 'unit', module)
    if not theta.is_injective() or not vartheta.compose(theta).is_zero():
        return False
    kernel = rep.kernel(vartheta)[0]
    if kernel.dims != theta.ranks():
        return False
    return ctx.apply(J_UPPER_STAR, rep.cokernel(vartheta)[0]).is_zero()


def _right_sequence_exact(ctx, module):
    """``j_! j^* M -> M -> i_* i^* M -> 0`` is exact and ``j^*`` kills the
    kernel of the first map."""
    counit = unit_counit(ctx, 'j_lower_shriek-j_upper_star', 'counit', module)
    eta = unit_counit(ctx, 'i_upper_star-i_lower_star', 'unit', module)
    if not eta.is_surjective() or not eta.compose(counit).is_zero():
        return False
    if rep.kernel(eta)[0].dims != counit.ranks():
        return False
    return ctx.apply(J_UPPER_STAR, rep.kernel(counit)[0]).is_zero()


def _additivity_cases(ctx, which):
    functor = ctx.functors[which]
    source = ctx.side(functor.source)
    target = ctx.side(functor.target)
    for i, x in _items(source):
        for j, y in _items(source):
            if j < i:
                continue
            whole = target.decompose(ctx.apply(which, rep.direct_sum(x, y)))
            parts = sorted(
                target.decompose(ctx.apply(which, x))
                + target.decompose(ctx.apply(which, y))
            )
            if list(whole) != parts:
                yield {'objects': [source.label(i), source.label(j)]}


def _within(context, conflation):
    return all(
        context.within(context.decompose(module))
        for module in (conflation.sub, conflation.middle, conflation.quotient)
    )


def _conflation_labels(context, conflation):
    return [
        '+'.join(context.labels(context.decompose(module))) or '0'
        for module in (conflation.sub, conflation.middle, conflation.quotient)
    ]


def _exactness_cases(ctx, which):
    source = ctx.side(ctx.functors[which].source)
    for conflation in homology.probe_conflations(source.catalog):
        if not _within(source, conflation):
            continue
        image = homology.Conflation(ctx.apply(which, conflation.inflation),
                                    ctx.apply(which, conflation.deflation))
        if not image.is_exact():
            yield {'conflation': _conflation_labels(source, conflation)}


def exactness_report(ctx, functors=FUNCTORS):
    """Probe each functor in ``functors`` for exactness on test conflations.

    ``i^*`` is right exact only, so its probe is expected to fail on the
    recollement of a triangular algebra.

    """
    report = Report('exactness')
    for which in functors:
        name = 'exact:{}'.format(which)
        with report.guard(name):
            _check(report, name, _exactness_cases(ctx, which))
    return report


def _ext_identity_cases(ctx):
    """``Ext^k(i_* a, b) = Ext^k(a, i^! b)`` and ``Ext^k(j_! c, b) =
    Ext^k(c, j^* b)``, for ``k`` up to the global dimension of ``B``.

    Only ``k = 1`` is checked over extension-closed subcategories, where
    higher extensions are not those of the module category.

    """
    top = homology.global_dimension(ctx.algebra_b) \
        if ctx.b.mode == subcat.FULL else 1
    for degree in range(1, top + 1):
        for which, adjoint, side in ((I_LOWER_STAR, I_UPPER_SHRIEK, ctx.a),
                                     (J_LOWER_SHRIEK, J_UPPER_STAR, ctx.c)):
            for i, x in _items(side):
                for j, y in _items(ctx.b):
                    first = homology.ext_dim(degree, ctx.apply(which, x), y)
                    second = homology.ext_dim(degree, x, ctx.apply(adjoint, y))
                    if first != second:
                        yield {'degree': degree, 'functor': which,
                               'source': side.label(i), 'target': ctx.b.label(j)}
