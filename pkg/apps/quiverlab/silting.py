"""Silting subcategories, cotorsion pairs and their gluing along a recollement.

``M`` is presilting when ``Ext^k(M, M) = 0`` for every ``k >= 1`` and silting
when moreover its thick closure is the whole category. A silting ``M``
determines the cotorsion pair ``(M^v, M^)``, whose parts are the unions of
the cocone and cone towers of ``M``. The intersection of the two parts is
``M`` again.

Ext is only computed up to the global dimension, beyond which it vanishes.
These predicates therefore need a full module category.

"""
from collections import namedtuple
import itertools
import logging

import numpy as np

from quiverlab import homology, recollement, rep, subcat
from quiverlab.exceptions import BoundsExceeded, PreconditionError
from quiverlab.recollement import (
    I_LOWER_STAR,
    I_UPPER_SHRIEK,
    I_UPPER_STAR,
    J_LOWER_SHRIEK,
    J_LOWER_STAR,
    J_UPPER_STAR,
)
from quiverlab.reports import Report
from quiverlab.subcat import Subcategory, Verdict

logger = logging.getLogger(__name__)

CotorsionPair = namedtuple('CotorsionPair', ('t', 'f'))
CotorsionPair.__doc__ = """Two subcategories ``t`` and ``f`` of one context."""

GluedPair = namedtuple('GluedPair', ('t', 'f', 'left', 'right'))
GluedPair.__doc__ = """A cotorsion pair glued from ``left`` in ``a`` and
``right`` in ``c``."""


def _require_full(context):
    if context.mode != subcat.FULL:
        raise PreconditionError(
            'Silting and cotorsion predicates need a full module category.'
        )


def _vanishing(context, sources, targets, degrees):
    """Return the first ``Ext^k(s, t) != 0`` as a witness, or ``None``."""
    for degree in degrees:
        for i in sorted(sources):
            for j in sorted(targets):
                if homology.ext_dim(degree, context.items[i],
                                    context.items[j]):
                    return {'degree': degree, 'source': context.label(i),
                            'target': context.label(j)}
    return None


def is_presilting(subcategory):
    """Check that ``Ext^k(M, M)`` vanishes for ``1 <= k <= gldim``.

    >>> from quiverlab import factories
    >>> context = factories.a2_context()
    >>> is_presilting(Subcategory(context, [0, 2])).passed
    True
    >>> is_presilting(Subcategory(context, [0, 1])).witness
    {'degree': 1, 'source': 'S1', 'target': 'S2'}

    """
    context = subcategory.context
    _require_full(context)
    top = homology.global_dimension(context.algebra)
    witness = _vanishing(context, subcategory.members, subcategory.members,
                         range(1, top + 1))
    return Verdict(witness is None, witness)


def is_silting(subcategory, bounds=subcat.SearchBounds()):
    """Check that ``M`` is presilting and that its thick closure is the
    universe.

    On success the witness is the closure trace; on failure it names the
    failed condition.

    >>> from quiverlab import factories
    >>> context = factories.a2_context()
    >>> is_silting(Subcategory(context, [0, 2])).passed
    True
    >>> is_silting(Subcategory(context, [2])).witness['missing']
    ['S2', 'S1']

    """
    presilting = is_presilting(subcategory)
    if not presilting.passed:
        return Verdict(False, {'presilting': presilting.witness})
    closure, trace = subcat.closure_trace(subcategory, bounds)
    context = subcategory.context
    if closure.members != context.universe:
        missing = sorted(context.universe - closure.members)
        return Verdict(False, {'closure': closure.labels(),
                               'missing': context.labels(missing)})
    return Verdict(True, {'trace': trace})


def _realizing_middle_terms(context, fixed, others, bounds, fixed_is_quotient):
    """Yield middle terms of conflations between ``fixed`` and composites of
    ``others``.

    With ``fixed_is_quotient`` the conflations are ``Y -> E -> fixed``,
    otherwise ``fixed -> E -> Y``; ``Y`` runs over sums of ``others`` with
    full rank classes and multiplicities at most ``sum_mult``.

    """
    field = context.algebra.field
    item = context.items[fixed]
    limits = {}
    for index in sorted(others):
        classes = context.ext1(fixed, index) if fixed_is_quotient else \
            context.ext1(index, fixed)
        if classes:
            limits[index] = min(bounds.sum_mult, classes)
    spent = 0
    for choice in subcat._choices(limits):  # pylint: disable=W0212
        bases = []
        for index, _ in choice:
            if fixed_is_quotient:
                bases.append(homology.ext1_basis(item, context.items[index]))
            else:
                bases.append(homology.ext1_basis(context.items[index], item))
        forms = [list(field.column_echelon_forms(len(basis), mult))
                 for basis, (_, mult) in zip(bases, choice)]
        spent += int(np.prod([len(f) for f in forms]))
        if spent > bounds.ext_cap:
            raise BoundsExceeded(
                'More than {} extension classes to realize.'.format(
                    bounds.ext_cap
                )
            )
        for picked in itertools.product(*forms):
            conflations = [
                homology.realize(homology.combine(form[:, j], list(basis)))
                for basis, form in zip(bases, picked)
                for j in range(form.shape[1])
            ]
            if fixed_is_quotient:
                yield homology.compose_coextension(conflations).middle
            else:
                yield homology.compose_extension(conflations).middle


def _approximated(context, pair, bounds, right):
    """Return the first item lacking an approximation conflation, or ``None``.

    ``right`` asks for ``F -> T -> C`` with ``C`` given, otherwise for
    ``C -> F -> T``.

    """
    trivial = pair.t if right else pair.f
    wanted = pair.t if right else pair.f
    others = pair.f if right else pair.t
    for index in sorted(context.universe):
        if index in trivial:
            continue
        if not any(
                wanted.contains_module(middle)
                for middle in _realizing_middle_terms(
                    context, index, others.members, bounds, right)):
            return {'object': context.label(index)}
    return None


def is_cotorsion_pair(pair, bounds=subcat.SearchBounds()):
    """Check ``Ext^1(t, f) = 0`` and the existence of approximation
    conflations ``F -> T -> C`` and ``C -> F -> T`` for every item ``C``.

    The witness maps each of ``ext``, ``right`` and ``left`` to a ``Verdict``.

    """
    context = pair.t.context
    _require_full(context)
    checks = {}
    witness = _vanishing(context, pair.t.members, pair.f.members, [1])
    checks['ext'] = Verdict(witness is None, witness)
    witness = _approximated(context, pair, bounds, right=True)
    checks['right'] = Verdict(witness is None, witness)
    witness = _approximated(context, pair, bounds, right=False)
    checks['left'] = Verdict(witness is None, witness)
    return Verdict(all(v.passed for v in checks.values()), checks)


def is_hereditary(pair):
    """Check ``Ext^k(t, f) = 0`` for ``2 <= k <= gldim``."""
    context = pair.t.context
    _require_full(context)
    top = homology.global_dimension(context.algebra)
    witness = _vanishing(context, pair.t.members, pair.f.members,
                         range(2, top + 1))
    return Verdict(witness is None, witness)


def is_bounded(pair, bounds=subcat.SearchBounds()):
    """Check that the cone tower of ``t`` and the cocone tower of ``f`` both
    reach the universe."""
    hat = subcat.tower_hat(pair.t, bounds)
    check = subcat.tower_check(pair.f, bounds)
    witness = None
    if not (hat.saturates and check.saturates):
        witness = {'t_hat': subcat.tower_union(hat).labels(),
                   'f_check': subcat.tower_union(check).labels()}
    return Verdict(witness is None, witness)


def silting_pair(subcategory, bounds=subcat.SearchBounds()):
    """Return ``(M^v, M^)`` from the towers of ``M``."""
    return CotorsionPair(
        subcat.tower_union(subcat.tower_check(subcategory, bounds)),
        subcat.tower_union(subcat.tower_hat(subcategory, bounds)),
    )


def _add_verdict(report, name, verdict):
    witness = verdict.witness
    if isinstance(witness, dict) and all(
            isinstance(v, Verdict) for v in witness.values()):
        witness = {key: v.witness for key, v in sorted(witness.items())
                   if not v.passed} or None
    report.add(name, verdict.passed, None if verdict.passed else witness)


def at_bijection_check(subcategory, bounds=subcat.SearchBounds()):
    """Check that the pair of a silting ``M`` is a bounded hereditary
    cotorsion pair whose intersection is ``M``.

    >>> from quiverlab import factories
    >>> context = factories.a2_context()
    >>> at_bijection_check(Subcategory(context, [1, 2])).status
    'pass'

    """
    silting = is_silting(subcategory, bounds)
    if not silting.passed:
        raise PreconditionError('The subcategory is not silting: {!r}.'.format(
            silting.witness
        ))
    report = Report('silting check', M=subcategory.labels())
    report.add('silting', True)
    pair = silting_pair(subcategory, bounds)
    report.payload['M_check'] = pair.t.labels()
    report.payload['M_hat'] = pair.f.labels()
    _add_verdict(report, 'cotorsion_pair', is_cotorsion_pair(pair, bounds))
    _add_verdict(report, 'hereditary', is_hereditary(pair))
    _add_verdict(report, 'bounded', is_bounded(pair, bounds))
    intersection = pair.t & pair.f
    report.add('intersection', intersection == subcategory,
               None if intersection == subcategory else
               {'intersection': intersection.labels()})
    return report


def _members_where(ctx, conditions):
    """Return the ``b`` items ``B`` with ``F(B)`` in ``S`` for every
    ``(F, S)`` in ``conditions``."""
    members = []
    for index in sorted(ctx.b.universe):
        module = ctx.b.items[index]
        if all(target.contains_module(ctx.apply(which, module))
               for which, target in conditions):
            members.append(index)
    return members


def glue_cotorsion(ctx, left, right):
    """Glue cotorsion pairs ``left`` in ``a`` and ``right`` in ``c``.

    ``t`` holds the ``B`` with ``i^* B`` in ``left.t`` and ``j^* B`` in
    ``right.t``; ``f`` holds those with ``i^! B`` in ``left.f`` and ``j^* B``
    in ``right.f``.

    """
    t = _members_where(ctx, [(I_UPPER_STAR, left.t), (J_UPPER_STAR, right.t)])
    f = _members_where(ctx, [(I_UPPER_SHRIEK, left.f), (J_UPPER_STAR, right.f)])
    return GluedPair(Subcategory(ctx.b, t), Subcategory(ctx.b, f), left, right)


def exactness_hypotheses(ctx):
    """Probe the exactness of ``i^*``, ``i^!`` and ``j_!``."""
    probe = recollement.exactness_report(
        ctx, (I_UPPER_STAR, I_UPPER_SHRIEK, J_LOWER_SHRIEK)
    )
    return {
        '{}_exact'.format(check['name'].split(':', 1)[1]): check['passed']
        for check in probe.checks
    }


def glue_silting(ctx, silting_a, silting_c, bounds=subcat.SearchBounds()):
    """Glue silting subcategories of ``a`` and ``c`` into one of ``b``.

    The result is ``add(i_* M_A + j_! M_C)``. The set described by the
    towers, the ``B`` with ``i^* B`` in ``M_A^v``, ``j^* B`` in ``M_C^v``,
    ``i^! B`` in ``M_A^`` and ``j^* B`` in ``M_C^``, is reported alongside
    with an ``agreement`` flag. The two agree when ``i^*``, ``i^!`` and ``j_!``
    are exact; when a hypothesis fails, a disagreement is recorded as
    undecided.

    Returns ``(subcategory, report)``.

    """
    for name, subcategory in (('M_A', silting_a), ('M_C', silting_c)):
        verdict = is_silting(subcategory, bounds)
        if not verdict.passed:
            raise PreconditionError('{} is not silting: {!r}.'.format(
                name, verdict.witness
            ))
    report = Report('silting glue', M_A=silting_a.labels(),
                    M_C=silting_c.labels())
    hypotheses = exactness_hypotheses(ctx)
    report.payload['hypotheses'] = hypotheses
    for name, value in sorted(hypotheses.items()):
        report.add('hypothesis:{}'.format(name), True if value else None)
    glued = glue_cotorsion(ctx, silting_pair(silting_a, bounds),
                           silting_pair(silting_c, bounds))
    described = glued.t & glued.f
    report.payload['tower_description'] = described.labels()
    generators = [ctx.apply(I_LOWER_STAR, m) for m in silting_a.modules()]
    generators += [ctx.apply(J_LOWER_SHRIEK, m) for m in silting_c.modules()]
    result = subcat.add_closure(ctx.b, generators)
    report.payload['M_B'] = result.labels()
    _add_verdict(report, 'silting', is_silting(result, bounds))
    agreement = described == result
    report.payload['agreement'] = agreement
    if agreement:
        report.add('agreement', True)
    else:
        report.add('agreement', None if not all(hypotheses.values()) else False,
                   {'tower_description': described.labels(),
                    'M_B': result.labels()})
    logger.info('glued %s and %s into %s', silting_a.labels(),
                silting_c.labels(), result.labels())
    return result, report


def _image(ctx, which, members, target):
    found = set()
    for index in members:
        found.update(target.decompose(ctx.apply(which, ctx.b.items[index])))
    return Subcategory(target, found)


def _stays_inside(ctx, members, composite):
    inner, outer = composite
    for index in sorted(members.members):
        module = ctx.apply(outer, ctx.apply(inner, ctx.b.items[index]))
        if not members.contains_module(module):
            return False
    return True


def restrict_silting(ctx, subcategory, bounds=subcat.SearchBounds()):
    """Restrict a silting subcategory of ``b`` to ``a`` and ``c``.

    The candidates are ``i^* M^v & i^! M^`` in ``a`` and ``j^* M^v & j^* M^``
    in ``c``. They are silting under the hypotheses (a) ``i_* i^! M^v`` and
    ``i_* i^* M^v`` lie in ``M^v``, and (b) ``j_* j^* M^`` lies in ``M^`` or
    ``j_! j^* M^v`` lies in ``M^v``. Failing hypotheses are recorded as
    undecided and the candidates are still reported.

    Returns ``(candidate_a, candidate_c, report)``.

    """
    verdict = is_silting(subcategory, bounds)
    if not verdict.passed:
        raise PreconditionError('The subcategory is not silting: {!r}.'.format(
            verdict.witness
        ))
    report = Report('silting restrict', M=subcategory.labels())
    pair = silting_pair(subcategory, bounds)
    check, hat = pair.t, pair.f
    hypothesis_a = _stays_inside(ctx, check, (I_UPPER_SHRIEK, I_LOWER_STAR)) \
        and _stays_inside(ctx, check, (I_UPPER_STAR, I_LOWER_STAR))
    hypothesis_b = _stays_inside(ctx, hat, (J_UPPER_STAR, J_LOWER_STAR)) \
        or _stays_inside(ctx, check, (J_UPPER_STAR, J_LOWER_SHRIEK))
    report.payload['hypotheses'] = {'a': hypothesis_a, 'b': hypothesis_b}
    report.add('hypothesis:a', True if hypothesis_a else None)
    report.add('hypothesis:b', True if hypothesis_b else None)
    candidate_a = _image(ctx, I_UPPER_STAR, check.members, ctx.a) & \
        _image(ctx, I_UPPER_SHRIEK, hat.members, ctx.a)
    candidate_c = _image(ctx, J_UPPER_STAR, check.members, ctx.c) & \
        _image(ctx, J_UPPER_STAR, hat.members, ctx.c)
    report.payload['candidate_a'] = candidate_a.labels()
    report.payload['candidate_c'] = candidate_c.labels()
    for name, candidate in (('a', candidate_a), ('c', candidate_c)):
        verdict = is_silting(candidate, bounds)
        passed = verdict.passed or (
            None if not (hypothesis_a and hypothesis_b) else False
        )
        report.add('silting:{}'.format(name), passed,
                   None if verdict.passed else verdict.witness)
    generated_a = _image(ctx, I_UPPER_STAR, subcategory.members, ctx.a)
    generated_c = _image(ctx, J_UPPER_STAR, subcategory.members, ctx.c)
    report.add('generated:a', generated_a == candidate_a,
               None if generated_a == candidate_a else
               {'add_i_upper_star_M': generated_a.labels()})
    report.add('generated:c', generated_c == candidate_c,
               None if generated_c == candidate_c else
               {'add_j_upper_star_M': generated_c.labels()})
    return candidate_a, candidate_c, report


# approximations

def _flatten(morphism):
    parts = [matrix.reshape(-1) for matrix in morphism.mats]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def _in_span(field, vector, others):
    if not others:
        return not np.any(vector)
    return field.solve(np.stack(others, axis=1), vector) is not None


def minimal_approximation(subcategory, module, right=True):
    """Return a minimal right (or left) approximation of ``module``.

    A right approximation is ``T -> module`` with ``T`` in ``subcategory``
    through which every such map factors. It starts from all Hom basis maps
    and drops, one at a time, those that factor through the others.

    Returns ``(T, morphism)``.

    """
    context = subcategory.context
    field = module.field
    generators = []
    for index in subcategory:
        item = context.items[index]
        basis = rep.hom_basis(item, module) if right else \
            rep.hom_basis(module, item)
        generators.extend((index, h) for h in basis)
    changed = True
    while changed:
        changed = False
        for position, (index, h) in enumerate(generators):
            rest = generators[:position] + generators[position + 1:]
            item = context.items[index]
            spans = []
            for other, g in rest:
                other_item = context.items[other]
                if right:
                    spans.extend(_flatten(g.compose(k))
                                 for k in rep.hom_basis(item, other_item))
                else:
                    spans.extend(_flatten(k.compose(g))
                                 for k in rep.hom_basis(other_item, item))
            if _in_span(field, _flatten(h), spans):
                generators = rest
                changed = True
                break
    if not generators:
        zero = rep.zero_module(module.algebra)
        if right:
            return zero, rep.Morphism.zero(zero, module)
        return zero, rep.Morphism.zero(module, zero)
    maps = [h for _, h in generators]
    morphism = rep.hstack(maps) if right else rep.vstack(maps)
    return (morphism.source if right else morphism.target), morphism


def _step(ctx, glued, module):
    """Return the conflation ``K -> T -> module``."""
    _, r2 = minimal_approximation(glued.right.t,
                                  ctx.apply(J_UPPER_STAR, module))
    vartheta = recollement.unit_counit(ctx, 'j_upper_star-j_lower_star',
                                       'unit', module)
    first = homology.pullback(vartheta, ctx.apply(J_LOWER_STAR, r2))
    middle = first.corner
    _, r1 = minimal_approximation(glued.left.t,
                                  ctx.apply(I_UPPER_STAR, middle))
    eta = recollement.unit_counit(ctx, 'i_upper_star-i_lower_star', 'unit',
                                  middle)
    second = homology.pullback(eta, ctx.apply(I_LOWER_STAR, r1))
    deflation = first.first.compose(second.first)
    inclusion = rep.kernel(deflation)[1]
    return homology.Conflation(inclusion, deflation)


def _costep(ctx, glued, module):
    """Return the conflation ``module -> F -> L``."""
    _, l2 = minimal_approximation(glued.right.f,
                                  ctx.apply(J_UPPER_STAR, module), right=False)
    counit = recollement.unit_counit(ctx, 'j_lower_shriek-j_upper_star',
                                     'counit', module)
    first = homology.pushout(counit, ctx.apply(J_LOWER_SHRIEK, l2))
    middle = first.corner
    _, l1 = minimal_approximation(glued.left.f,
                                  ctx.apply(I_UPPER_SHRIEK, middle),
                                  right=False)
    theta = recollement.unit_counit(ctx, 'i_lower_star-i_upper_shriek',
                                    'counit', middle)
    second = homology.pushout(theta, ctx.apply(I_LOWER_STAR, l1))
    inflation = second.first.compose(first.first)
    projection = rep.cokernel(inflation)[1]
    return homology.Conflation(inflation, projection)


def _labels(context, module):
    return context.labels(context.decompose(module))


def _chain(ctx, glued, module, bounds, dual):
    command = 'coapproximation triangle' if dual else 'approximation triangle'
    report = Report(command, M=_labels(ctx.b, module))
    target = glued.f if dual else glued.t
    chain = []
    current = module
    for depth in range(bounds.tower_depth):
        if current.is_zero():
            break
        conflation = _costep(ctx, glued, current) if dual else \
            _step(ctx, glued, current)
        middle = conflation.middle
        rest = conflation.quotient if dual else conflation.sub
        chain.append({
            'M': _labels(ctx.b, current),
            'middle': _labels(ctx.b, middle),
            'rest': _labels(ctx.b, rest),
        })
        report.add('exact:{}'.format(depth), conflation.is_exact())
        report.add('member:{}'.format(depth), target.contains_module(middle),
                   None if target.contains_module(middle) else
                   {'middle': _labels(ctx.b, middle)})
        current = rest
    report.payload['chain'] = chain
    report.add('terminates', True if current.is_zero() else None,
               None if current.is_zero() else {'depth': bounds.tower_depth})
    return report


def approximation_triangle(ctx, glued, module, bounds=subcat.SearchBounds()):
    """Build conflations ``K -> T -> M`` with ``T`` in the glued ``t`` and
    continue on ``K`` until it vanishes.

    Each step approximates ``j^* M`` from the right by ``right.t``, pulls back
    along ``M -> j_* j^* M``, approximates ``i^*`` of the result by
    ``left.t`` and pulls back along the unit ``H -> i_* i^* H``.

    """
    return _chain(ctx, glued, module, bounds, dual=False)


def coapproximation_triangle(ctx, glued, module, bounds=subcat.SearchBounds()):
    """Build conflations ``M -> F -> L`` with ``F`` in the glued ``f`` and
    continue on ``L`` until it vanishes. This is the dual recipe, with left
    approximations and pushouts along the counits."""
    return _chain(ctx, glued, module, bounds, dual=True)
