"""Subcategories of a module category, and the closure operations on them.

A ``Subcategory`` is ``add`` of a set of catalog items, so it is closed under
finite sums and summands for free. Closure under extensions, cones and cocones
is checked on three tables of conflations computed once per context and
bounds:

* extension entries ``s -> E -> Y``,
* cone entries ``s -> Y -> C`` from monomorphisms,
* cocone entries ``C -> Y -> s`` from epimorphisms,

where ``s`` is an indecomposable and ``Y`` a sum of indecomposables with every
multiplicity at most ``sum_mult``. A conflation whose first term is a sum
factors through conflations of this shape, so the extension table is exact
whenever every ``Ext^1`` dimension between items is at most ``sum_mult``.

A ``CategoryContext`` in ``extension-closed`` mode stands for an extension
closed subcategory of the module category. There, only conflations whose
terms all lie in the universe count.

"""
from collections import Counter, namedtuple
import itertools
import logging

from django.core.exceptions import ValidationError
import numpy as np

from quiverlab import homology, rep
from quiverlab.exactlin import gaussian_binomial
from quiverlab.exceptions import BoundsExceeded, PreconditionError

logger = logging.getLogger(__name__)

FULL = 'full'
EXTENSION_CLOSED = 'extension-closed'
MODES = (FULL, EXTENSION_CLOSED)

# enumerate_thick inspects every subset of the universe.
MAX_UNIVERSE = 20


class SearchBounds(namedtuple('SearchBounds', (
        'sum_mult', 'hom_enum_cap', 'tower_depth', 'ext_cap'))):
    """Bounds for the searches behind the closure predicates.

    >>> SearchBounds()
    SearchBounds(sum_mult=2, hom_enum_cap=100000, tower_depth=8, ext_cap=10000)
    >>> SearchBounds(sum_mult=0)
    Traceback (most recent call last):
    ...
    django.core.exceptions.ValidationError: ['sum_mult must be at least 1.']

    """

    __slots__ = ()

    def __new__(cls, sum_mult=2, hom_enum_cap=10 ** 5, tower_depth=8,
                ext_cap=homology.DEFAULT_EXT_CAP):
        self = super(SearchBounds, cls).__new__(
            cls, sum_mult, hom_enum_cap, tower_depth, ext_cap
        )
        for name, value in self._asdict().items():
            if value < 1:
                raise ValidationError('{} must be at least 1.'.format(name))
        return self

    def as_dict(self):
        """Return the bounds as a plain ``dict``, for reports."""
        return dict(self._asdict())


Entry = namedtuple('Entry', ('source', 'parts', 'result'))
Entry.__doc__ = """A conflation from a table.

``source`` is the index of the indecomposable end, ``parts`` the sorted indices
of the composite end (with repetition) and ``result`` the sorted indices of the
decomposed remaining term.

"""

Tables = namedtuple('Tables', ('extensions', 'cones', 'cocones'))

Verdict = namedtuple('Verdict', ('passed', 'witness'))

Tower = namedtuple('Tower', ('layers', 'saturates'))
Tower.__doc__ = """The layers of a cone or cocone tower, and whether their
union is the whole universe."""


class CategoryContext(object):
    """A catalog together with the universe of items that form the category.

    In ``extension-closed`` mode every middle term of a conflation between
    universe items must decompose inside the universe; this is verified here.

    """

    def __init__(self, catalog, universe=None, mode=FULL,
                 ext_cap=homology.DEFAULT_EXT_CAP):
        if mode not in MODES:
            raise ValidationError('Unknown mode {}.'.format(mode))
        self.catalog = catalog
        self.algebra = catalog.algebra
        if universe is None:
            universe = range(len(catalog.items))
        self.universe = frozenset(universe)
        if not self.universe <= frozenset(range(len(catalog.items))):
            raise PreconditionError('The universe must consist of catalog items.')
        self.mode = mode
        self._ext1 = {}
        self._tables = {}
        self._layers = {}
        if mode == EXTENSION_CLOSED:
            self._check_extension_closed(ext_cap)

    def __repr__(self):
        return 'CategoryContext({} of {} items, {})'.format(
            len(self.universe), len(self.catalog.items), self.mode
        )

    def _check_extension_closed(self, cap):
        for i in sorted(self.universe):
            for j in sorted(self.universe):
                for middle in homology.ext1_middle_terms(
                        self.catalog.items[i], self.catalog.items[j], cap,
                        self.catalog):
                    parts = self.catalog.decompose(middle)
                    if not set(parts) <= self.universe:
                        raise PreconditionError(
                            'The universe is not closed under extensions: '
                            '{} -> {} -> {}.'.format(
                                self.label(j),
                                '+'.join(self.labels(parts)),
                                self.label(i),
                            )
                        )

    @property
    def items(self):
        """The catalog items."""
        return self.catalog.items

    def label(self, index):
        """Return the label of item ``index``."""
        return self.catalog.labels[index]

    def labels(self, indices):
        """Return the labels of ``indices``, in the given order."""
        return [self.catalog.labels[i] for i in indices]

    def ext1(self, source, target):
        """Return ``dim Ext^1(items[source], items[target])``."""
        key = (source, target)
        if key not in self._ext1:
            self._ext1[key] = homology.ext_dim(
                1, self.items[source], self.items[target]
            )
        return self._ext1[key]

    def hom(self, source, target):
        """Return ``dim Hom(items[source], items[target])``."""
        return self.catalog.fingerprints[source][target]

    def decompose(self, module):
        """Return the sorted catalog indices of the summands of ``module``."""
        return self.catalog.decompose(module)

    def within(self, indices):
        """Tell whether every index lies in the universe."""
        return set(indices) <= self.universe

    def whole(self):
        """Return the subcategory of all universe items."""
        return Subcategory(self, self.universe)

    def zero(self):
        """Return the zero subcategory."""
        return Subcategory(self, ())

    def tables(self, bounds):
        """Return the conflation ``Tables`` at ``bounds``."""
        key = (bounds.sum_mult, bounds.hom_enum_cap, bounds.ext_cap)
        if key not in self._tables:
            tables = Tables(
                self._extension_entries(bounds),
                self._morphism_entries(bounds, cone=True),
                self._morphism_entries(bounds, cone=False),
            )
            logger.info(
                'computed %d extension, %d cone and %d cocone entries for %r',
                len(tables.extensions), len(tables.cones), len(tables.cocones),
                self,
            )
            self._tables[key] = tables
        return self._tables[key]

    def _accept(self, entry):
        if self.mode == FULL:
            return True
        return self.within(entry.result)

    def _extension_entries(self, bounds):
        field = self.algebra.field
        entries = set()
        spent = 0
        for source in sorted(self.universe):
            limits = {}
            for target in sorted(self.universe):
                classes = self.ext1(target, source)
                if classes:
                    limits[target] = min(bounds.sum_mult, classes)
            for choice in _choices(limits):
                bases = [
                    homology.ext1_basis(self.items[t], self.items[source])
                    for t, _ in choice
                ]
                forms = [
                    list(field.column_echelon_forms(len(basis), mult))
                    for basis, (_, mult) in zip(bases, choice)
                ]
                spent += int(np.prod([len(f) for f in forms]))
                if spent > bounds.ext_cap:
                    raise BoundsExceeded(
                        'More than {} extension classes to realize.'.format(
                            bounds.ext_cap
                        )
                    )
                parts = tuple(sorted(
                    t for t, mult in choice for _ in range(mult)
                ))
                for picked in itertools.product(*forms):
                    conflations = []
                    for basis, form in zip(bases, picked):
                        for j in range(form.shape[1]):
                            conflations.append(homology.realize(
                                homology.combine(form[:, j], list(basis))
                            ))
                    middle = homology.compose_extension(conflations).middle
                    entry = Entry(source, parts, self.decompose(middle))
                    if self._accept(entry):
                        entries.add(entry)
        return tuple(sorted(entries))

    def _morphism_entries(self, bounds, cone):
        field = self.algebra.field
        entries = set()
        spent = 0
        for source in sorted(self.universe):
            limits = {}
            for target in sorted(self.universe):
                dim = self.hom(source, target) if cone else \
                    self.hom(target, source)
                if dim:
                    limits[target] = min(bounds.sum_mult, dim)
            for choice in _choices(limits):
                spent += int(np.prod([
                    gaussian_binomial(len(self._basis(source, t, cone)),
                                      mult, field.prime)
                    for t, mult in choice
                ]))
                if spent > bounds.hom_enum_cap:
                    raise BoundsExceeded(
                        'More than {} morphisms to enumerate.'.format(
                            bounds.hom_enum_cap
                        )
                    )
                parts = tuple(sorted(
                    t for t, mult in choice for _ in range(mult)
                ))
                bases = [self._basis(source, t, cone) for t, _ in choice]
                forms = [
                    list(field.column_echelon_forms(len(basis), mult))
                    for basis, (_, mult) in zip(bases, choice)
                ]
                for picked in itertools.product(*forms):
                    components = []
                    for basis, form in zip(bases, picked):
                        for j in range(form.shape[1]):
                            components.append(
                                rep.linear_combination(form[:, j], list(basis))
                            )
                    if cone:
                        morphism = rep.vstack(components)
                        if not morphism.is_injective():
                            continue
                        result = rep.cokernel(morphism)[0]
                    else:
                        morphism = rep.hstack(components)
                        if not morphism.is_surjective():
                            continue
                        result = rep.kernel(morphism)[0]
                    entry = Entry(source, parts, self.decompose(result))
                    if self._accept(entry):
                        entries.add(entry)
        return tuple(sorted(entries))

    def _basis(self, source, target, cone):
        if cone:
            return rep.hom_basis(self.items[source], self.items[target])
        return rep.hom_basis(self.items[target], self.items[source])

    def tower_layer(self, kind, previous, members, bounds):
        """Return the layer after ``previous`` in a tower over ``members``.

        For ``kind='cones'`` the layer adds the summands of the cokernels of
        monomorphisms ``X -> Y``; for ``kind='cocones'`` the kernels of
        epimorphisms ``Y -> X``. ``X`` is a sum of at most ``sum_mult`` items
        of ``previous`` and ``Y`` a sum of members.

        A composite ``X`` is split off one item at a time through the table,
        each item free of extensions with those split off before it, so the
        pieces always add up to a direct sum. This reaches every ``X`` whose
        summands have no cycle of nonzero ``Ext^1``, in particular every
        ``X`` over a representation-directed algebra.

        """
        key = (kind, previous, members) + tuple(bounds)
        if key in self._layers:
            return self._layers[key]
        cone = kind == 'cones'
        by_source = {}
        for entry in getattr(self.tables(bounds), kind):
            by_source.setdefault(entry.source, []).append(entry)
        layer = set(previous) | set(members)
        # (remaining composite end, items split off, members spent on Y)
        states = {((), (), ())}
        for _ in range(bounds.sum_mult):
            following = set()
            for pieces, done, spent in states:
                for source in sorted(previous):
                    if any(self.ext1(source, old) if cone else
                           self.ext1(old, source) for old in done):
                        continue
                    for entry in by_source.get(source, ()):
                        for taken, fresh in _splits(entry.parts, pieces,
                                                    members, spent,
                                                    bounds.sum_mult):
                            layer.update(entry.result)
                            rest = Counter(pieces)
                            rest.subtract(taken)
                            following.add((
                                tuple(sorted(rest.elements())) + entry.result,
                                tuple(sorted(done + (source,))),
                                tuple(sorted(spent + fresh)),
                            ))
            states = {
                (tuple(sorted(pieces)), done, spent)
                for pieces, done, spent in following
            }
            if not states:
                break
        self._layers[key] = frozenset(layer)
        return self._layers[key]


def _choices(limits):
    """Yield nonempty ``((index, mult), ...)`` with ``1 <= mult <= limit``."""
    indices = sorted(limits)
    ranges = [range(limits[i] + 1) for i in indices]
    for mults in itertools.product(*ranges):
        choice = tuple((i, m) for i, m in zip(indices, mults) if m)
        if choice:
            yield choice


def _splits(parts, pieces, members, spent, limit):
    """Yield ``(taken, fresh)``: ``parts`` drawn partly from ``pieces`` and
    partly from new copies of members, at most ``limit`` copies of each.

    >>> list(_splits((1, 2), (2,), {1, 2}, (), 2))
    [((), (1, 2)), ((2,), (1,))]
    >>> list(_splits((3,), (), {1, 2}, (), 2))
    []

    """
    have = Counter(pieces)
    used = Counter(spent)
    options = []
    for index, count in sorted(Counter(parts).items()):
        ways = []
        for own in range(min(count, have[index]) + 1):
            extra = count - own
            if extra and (index not in members or
                          used[index] + extra > limit):
                continue
            ways.append((own, extra))
        if not ways:
            return
        options.append((index, ways))
    for picked in itertools.product(*[ways for _, ways in options]):
        taken, fresh = [], []
        for (index, _), (own, extra) in zip(options, picked):
            taken += [index] * own
            fresh += [index] * extra
        yield tuple(taken), tuple(fresh)


class Subcategory(object):
    """``add`` of a set of catalog items inside a context."""

    def __init__(self, context, members):
        self.context = context
        self.members = frozenset(members)
        if not context.within(self.members):
            raise PreconditionError(
                'Subcategory members must lie in the universe.'
            )

    def __repr__(self):
        return 'Subcategory({})'.format(self.labels())

    def __eq__(self, other):
        return isinstance(other, Subcategory) and \
            self.context is other.context and self.members == other.members

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((id(self.context), self.members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, index):
        return index in self.members

    def __le__(self, other):
        return self.members <= other.members

    def __and__(self, other):
        return Subcategory(self.context, self.members & other.members)

    def __or__(self, other):
        return Subcategory(self.context, self.members | other.members)

    def sorted(self):
        """Return the members in catalog order."""
        return sorted(self.members)

    def labels(self):
        """Return the member labels in catalog order."""
        return self.context.labels(self.sorted())

    def sort_key(self):
        """Order subcategories by size, then by members."""
        return (len(self.members), self.sorted())

    def modules(self):
        """Return the member modules in catalog order."""
        return [self.context.items[i] for i in self.sorted()]

    def contains_module(self, module):
        """Tell whether every summand of ``module`` is a member."""
        return set(self.context.decompose(module)) <= self.members

    def generator(self):
        """Return the sum of all members, or the zero module."""
        modules = self.modules()
        if not modules:
            return rep.zero_module(self.context.algebra)
        return rep.direct_sum(*modules)


def add_closure(context, generators):
    """Return ``add`` of ``generators``.

    >>> from quiverlab import factories
    >>> context = factories.a2_context()
    >>> add_closure(context, [factories.a2_module('S1')]).labels()
    ['S1']
    >>> add_closure(context, []).labels()
    []

    """
    members = set()
    for module in generators:
        members.update(context.decompose(module))
    if not context.within(members):
        raise PreconditionError(
            'A summand of the generators lies outside the universe.'
        )
    return Subcategory(context, members)


def _entry_witness(context, entry):
    return {
        'source': context.label(entry.source),
        'parts': context.labels(entry.parts),
        'result': context.labels(entry.result),
    }


def _closed_under(subcategory, table):
    members = subcategory.members
    for entry in table:
        if entry.source in members and set(entry.parts) <= members and \
                not set(entry.result) <= members:
            return Verdict(False, _entry_witness(subcategory.context, entry))
    return Verdict(True, None)


def is_extension_closed(subcategory, bounds=SearchBounds()):
    """Check closure under extensions; return a ``Verdict``.

    The witness of a failure names the sub, quotient and middle terms.

    >>> from quiverlab import factories
    >>> context = factories.a2_context()
    >>> verdict = is_extension_closed(Subcategory(context, [0, 1]))
    >>> verdict.passed, verdict.witness['result']
    (False, ['P1'])

    """
    verdict = _closed_under(
        subcategory, subcategory.context.tables(bounds).extensions
    )
    if verdict.passed:
        return verdict
    witness = verdict.witness
    return Verdict(False, {
        'sub': witness['source'],
        'quotient': witness['parts'],
        'result': witness['result'],
    })


def is_cone_closed(subcategory, bounds=SearchBounds()):
    """Check closure under cokernels of monomorphisms; return a ``Verdict``."""
    return _closed_under(subcategory, subcategory.context.tables(bounds).cones)


def is_cocone_closed(subcategory, bounds=SearchBounds()):
    """Check closure under kernels of epimorphisms; return a ``Verdict``."""
    return _closed_under(
        subcategory, subcategory.context.tables(bounds).cocones
    )


def is_thick(subcategory, bounds=SearchBounds()):
    """Check all three closure properties.

    The ``witness`` of the result maps each check to its own ``Verdict``.

    """
    checks = {
        'extensions': is_extension_closed(subcategory, bounds),
        'cones': is_cone_closed(subcategory, bounds),
        'cocones': is_cocone_closed(subcategory, bounds),
    }
    return Verdict(all(v.passed for v in checks.values()), checks)


def closure_trace(subcategory, bounds=SearchBounds()):
    """Return ``(closure, trace)``: the thick closure and how it was reached.

    Each trace step records the items added, the kind of conflation and its
    two given ends.

    """
    context = subcategory.context
    tables = context.tables(bounds)
    members = set(subcategory.members)
    trace = []
    changed = True
    while changed:
        changed = False
        for kind, table in zip(Tables._fields, tables):
            for entry in table:
                if entry.source in members and set(entry.parts) <= members:
                    new = set(entry.result) - members
                    if new:
                        members |= new
                        changed = True
                        step = _entry_witness(context, entry)
                        step['kind'] = kind
                        step['added'] = context.labels(sorted(new))
                        trace.append(step)
    return Subcategory(context, members), trace


def thick_closure(context, generators, bounds=SearchBounds()):
    """Return the smallest thick subcategory containing ``generators``.

    ``generators`` is a ``Subcategory`` or an iterable of modules.

    >>> from quiverlab import factories
    >>> context = factories.a2_context()
    >>> projectives = Subcategory(context, [0, 2])
    >>> thick_closure(context, projectives).labels()
    ['S2', 'S1', 'P1']
    >>> thick_closure(context, []).labels()
    []

    """
    if not isinstance(generators, Subcategory):
        generators = add_closure(context, generators)
    return closure_trace(generators, bounds)[0]


def enumerate_thick(context, bounds=SearchBounds(), require_contains=None):
    """Return every thick subcategory of the universe, smallest first.

    A subset is thick exactly when it equals its thick closure.
    ``require_contains`` restricts the output to those containing it.

    """
    if len(context.universe) > MAX_UNIVERSE:
        raise BoundsExceeded(
            'The universe has {} items; at most {} can be enumerated.'.format(
                len(context.universe), MAX_UNIVERSE
            )
        )
    required = frozenset(require_contains.members) if require_contains \
        else frozenset()
    free = sorted(context.universe - required)
    found = []
    for size in range(len(free) + 1):
        for subset in itertools.combinations(free, size):
            candidate = Subcategory(context, required | frozenset(subset))
            if closure_trace(candidate, bounds)[0] == candidate:
                found.append(candidate)
    found.sort(key=Subcategory.sort_key)
    logger.info('found %d thick subcategories in %r', len(found), context)
    return found


def _tower(subcategory, bounds, kind):
    context = subcategory.context
    members = frozenset(subcategory.members)
    layers = [members]
    for _ in range(bounds.tower_depth):
        previous = layers[-1]
        layer = context.tower_layer(kind, previous, members, bounds)
        if layer == previous:
            break
        layers.append(layer)
    return Tower(
        tuple(Subcategory(context, layer) for layer in layers),
        layers[-1] == context.universe,
    )


def tower_hat(subcategory, bounds=SearchBounds()):
    """Return the cone tower: layer ``n`` adds the cones of maps from layer
    ``n - 1`` into the subcategory.

    >>> from quiverlab import factories
    >>> context = factories.a2_context()
    >>> tower = tower_hat(Subcategory(context, [0, 2]))
    >>> [layer.labels() for layer in tower.layers], tower.saturates
    ([['S2', 'P1'], ['S2', 'S1', 'P1']], True)

    """
    return _tower(subcategory, bounds, 'cones')


def tower_check(subcategory, bounds=SearchBounds()):
    """Return the cocone tower: layer ``n`` adds the cocones of maps from the
    subcategory onto layer ``n - 1``."""
    return _tower(subcategory, bounds, 'cocones')


def tower_union(tower):
    """Return the union of the layers of ``tower``."""
    return tower.layers[-1]
