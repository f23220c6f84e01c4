"""The correspondence between thick subcategories of ``c`` and the thick
subcategories of ``b`` that contain ``i_* a``.

``phi(V)`` is ``add j^* V`` and ``psi(W)`` is the set of ``M`` with
``j^* M`` in ``W``. The two maps are mutually inverse bijections.

"""
import logging

from quiverlab import recollement, subcat
from quiverlab.reports import Report

logger = logging.getLogger(__name__)


def _image(ctx, which, subcategory, target):
    members = set()
    for index in subcategory:
        members.update(target.decompose(
            ctx.apply(which, subcategory.context.items[index])
        ))
    return members


def phi(ctx, subcategory):
    """Return ``add j^* V`` as a subcategory of ``c``.

    >>> from quiverlab import factories
    >>> ctx = factories.a2_recollement()
    >>> phi(ctx, ctx.b.whole()).labels()
    ['S2', 'S1', 'P1']

    """
    return subcat.Subcategory(
        ctx.c, _image(ctx, recollement.J_UPPER_STAR, subcategory, ctx.c)
    )


def psi(ctx, subcategory):
    """Return the items ``M`` of ``b`` with ``j^* M`` in ``W``.

    >>> from quiverlab import factories
    >>> ctx = factories.a2_recollement()
    >>> psi(ctx, ctx.c.zero()).labels()
    ['(S2,0)', '(S1,0)', '(P1,0)']

    """
    members = []
    for index in sorted(ctx.b.universe):
        image = ctx.c.decompose(
            ctx.apply(recollement.J_UPPER_STAR, ctx.b.items[index])
        )
        if set(image) <= subcategory.members:
            members.append(index)
    return subcat.Subcategory(ctx.b, members)


def i_lower_star_closure(ctx):
    """Return ``add i_* a`` as a subcategory of ``b``."""
    members = set()
    for index in sorted(ctx.a.universe):
        members.update(ctx.b.decompose(
            ctx.apply(recollement.I_LOWER_STAR, ctx.a.items[index])
        ))
    return subcat.Subcategory(ctx.b, members)


def _contains_images(ctx, subcategory, composite):
    """Check ``F G V`` is inside ``V`` for ``composite = (G, F)``.

    Returns the first offending label, or ``None``.

    """
    inner, outer = composite
    for index in subcategory:
        module = ctx.apply(outer, ctx.apply(inner, ctx.b.items[index]))
        if not subcategory.contains_module(module):
            return ctx.b.label(index)
    return None


def verify_bijection(ctx, bounds=subcat.SearchBounds(), psi_map=psi):
    """Enumerate both sides and check that ``phi`` and ``psi`` are inverse.

    The report payload ``pairs`` lists every thick ``V`` of ``b`` containing
    ``i_* a`` together with ``phi(V)``, smallest first. ``psi_map`` replaces
    ``psi``.

    """
    report = Report('bijection verify')
    required = i_lower_star_closure(ctx)
    left = subcat.enumerate_thick(ctx.b, bounds, require_contains=required)
    right = subcat.enumerate_thick(ctx.c, bounds)
    left_set = set(left)
    right_set = set(right)
    report.payload['pairs'] = [
        {'V': v.labels(), 'phiV': phi(ctx, v).labels()} for v in left
    ]
    report.payload['thick_b'] = len(left)
    report.payload['thick_c'] = len(right)
    report.add('counts_match', len(left) == len(right),
               None if len(left) == len(right) else
               {'b': len(left), 'c': len(right)})

    def first(cases):
        for witness in cases:
            return witness
        return None

    def report_cases(name, cases):
        witness = first(cases)
        report.add(name, witness is None, witness)

    report_cases('phi_lands_in_thick', (
        {'V': v.labels()} for v in left if phi(ctx, v) not in right_set
    ))
    report_cases('psi_lands_in_thick', (
        {'W': w.labels()} for w in right if psi_map(ctx, w) not in left_set
    ))
    report_cases('phi_psi_identity', (
        {'W': w.labels()} for w in right if phi(ctx, psi_map(ctx, w)) != w
    ))
    report_cases('psi_phi_identity', (
        {'V': v.labels()} for v in left if psi_map(ctx, phi(ctx, v)) != v
    ))
    for name, composite in (
            ('i_lower_i_upper_star', (recollement.I_UPPER_STAR,
                                      recollement.I_LOWER_STAR)),
            ('i_lower_i_upper_shriek', (recollement.I_UPPER_SHRIEK,
                                        recollement.I_LOWER_STAR)),
            ('j_lower_star_j_upper_star', (recollement.J_UPPER_STAR,
                                           recollement.J_LOWER_STAR)),
            ('j_lower_shriek_j_upper_star', (recollement.J_UPPER_STAR,
                                             recollement.J_LOWER_SHRIEK))):
        report_cases('closed:{}'.format(name), (
            {'V': v.labels(), 'object': label}
            for v in left
            for label in [_contains_images(ctx, v, composite)]
            if label is not None
        ))
    report_cases('membership_by_image', _membership_cases(ctx, left))
    report_cases('phi_monotone', (
        {'V1': v1.labels(), 'V2': v2.labels()}
        for v1 in left for v2 in left
        if v1 <= v2 and not phi(ctx, v1) <= phi(ctx, v2)
    ))
    logger.info('bijection: %d thick subcategories on each side', len(left))
    return report


def _membership_cases(ctx, left):
    """An item ``M`` with ``j^* M`` in ``j^* V`` lies in ``V``."""
    for v in left:
        image = phi(ctx, v)
        for index in sorted(ctx.b.universe):
            module = ctx.apply(recollement.J_UPPER_STAR, ctx.b.items[index])
            if image.contains_module(module) and index not in v:
                yield {'V': v.labels(), 'object': ctx.b.label(index)}


def image_under_left_functors(ctx, subcategory, bounds=subcat.SearchBounds()):
    """Compute ``i^* V`` and ``i^! V`` and check that they are thick.

    The thickness of ``i^* V`` is asserted only when ``i_* i^* V`` lies in
    ``V``, and likewise for ``i^!``; otherwise the check is recorded as not
    applicable (undecided). When ``V`` contains ``i_* a`` both images must be
    all of ``a``.

    """
    report = Report('image under left functors')
    contains_a = i_lower_star_closure(ctx) <= subcategory
    for which in (recollement.I_UPPER_STAR, recollement.I_UPPER_SHRIEK):
        image = subcat.Subcategory(
            ctx.a, _image(ctx, which, subcategory, ctx.a)
        )
        report.payload[which] = image.labels()
        offender = _contains_images(ctx, subcategory,
                                    (which, recollement.I_LOWER_STAR))
        if offender is not None:
            report.add('thick:{}'.format(which), None,
                       {'hypothesis_fails_at': offender})
            continue
        verdict = subcat.is_thick(image, bounds)
        report.add('thick:{}'.format(which), verdict.passed,
                   None if verdict.passed else _verdict_witness(verdict))
        if contains_a:
            report.add('whole:{}'.format(which), image == ctx.a.whole(),
                       None if image == ctx.a.whole() else
                       {'image': image.labels()})
    return report


def _verdict_witness(verdict):
    return {
        name: check.witness
        for name, check in sorted(verdict.witness.items())
        if not check.passed
    }
