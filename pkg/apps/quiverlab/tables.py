"""django-tables2 class definitions, and a plain text renderer for them.

Reports in ``table`` mode are printed as aligned text: one table per kind of
payload, followed by the table of checks. See:
https://github.com/jieter/django-tables2

"""
import json

import django_tables2 as tables

# pylint: disable=R0903
# "Too few public methods (0/2)"
# It is both common and OK for a table class to have no methods.
#
# pylint: disable=W0232
# "Class has no __init__ method"
# It is both common and OK for a table class to have no __init__ method.
#
# pylint: disable=R0201
# Framework requires use of methods rather than functions


def _add(labels):
    """Format a list of labels as ``add(...)``, or ``0`` when empty.

    >>> _add(['S2', 'P1'])
    'add(S2, P1)'
    >>> _add([])
    '0'

    """
    if not labels:
        return '0'
    return 'add({})'.format(', '.join(labels))


def catalog_table():
    """Generate a table class for catalog items.

    Rows are dicts with keys ``index``, ``label`` and ``dims``.

    >>> table = catalog_table()([{'index': 0, 'label': 'S2', 'dims': [0, 1]}])
    >>> [list(row) for row in table.rows]
    [['0', 'S2', '(0, 1)']]

    """
    class CatalogTable(tables.Table):
        """A table listing indecomposables."""
        index = tables.Column(default='')
        label = tables.Column(default='')
        dims = tables.Column(verbose_name='dimension vector', default='')

        class Meta(object):
            """Table attributes that are not custom fields."""
            orderable = False

        def render_index(self, value):
            """Define how the ``index`` column should be rendered."""
            return str(value)

        def render_dims(self, value):
            """Define how the ``dims`` column should be rendered.

            ``value`` represents a single cell of data from the table.

            """
            return '({})'.format(', '.join(str(d) for d in value))

    return CatalogTable


def pairs_table():
    """Generate a table class for a correspondence ``V -> phi(V)``.

    Rows are dicts with keys ``V`` and ``phiV`` holding label lists.

    >>> table = pairs_table()([{'V': [], 'phiV': []}])
    >>> [list(row) for row in table.rows]
    [['0', '0']]

    """
    class PairsTable(tables.Table):
        """Rows ``subcategory | image``."""
        V = tables.Column(verbose_name='subcategory', empty_values=())
        phiV = tables.Column(verbose_name='image', empty_values=())

        class Meta(object):
            """Table attributes that are not custom fields."""
            orderable = False

        def render_V(self, value):  # pylint: disable=C0103
            """Define how the ``V`` column should be rendered."""
            return _add(value)

        def render_phiV(self, value):  # pylint: disable=C0103
            """Define how the ``phiV`` column should be rendered."""
            return _add(value)

    return PairsTable


def subcategories_table():
    """Generate a table class for a list of subcategories.

    Rows are dicts with keys ``size`` and ``members``.

    """
    class SubcategoriesTable(tables.Table):
        """A table listing subcategories by their members."""
        size = tables.Column(default='')
        members = tables.Column(empty_values=())

        class Meta(object):
            """Table attributes that are not custom fields."""
            orderable = False

        def render_size(self, value):
            """Define how the ``size`` column should be rendered."""
            return str(value)

        def render_members(self, value):
            """Define how the ``members`` column should be rendered."""
            return _add(value)

    return SubcategoriesTable


def checks_table():
    """Generate a table class for report checks.

    >>> table = checks_table()([{'name': 'cones', 'passed': None}])
    >>> [list(row) for row in table.rows]
    [['cones', 'unverified', '']]

    """
    class ChecksTable(tables.Table):
        """A table of named checks with their outcome and witness."""
        name = tables.Column(verbose_name='check', default='')
        passed = tables.Column(verbose_name='result', empty_values=())
        witness = tables.Column(default='')

        class Meta(object):
            """Table attributes that are not custom fields."""
            orderable = False

        def render_passed(self, value):
            """Define how the ``passed`` column should be rendered.

            ``None`` marks a check that could not be decided.

            """
            if value is None:
                return 'unverified'
            return 'pass' if value else 'fail'

        def render_witness(self, value):
            """Define how the ``witness`` column should be rendered."""
            return json.dumps(value, sort_keys=True)

    return ChecksTable


def render_text(table):
    """Render ``table`` as aligned text, one line per row.

    >>> table = pairs_table()([{'V': ['S1'], 'phiV': []}])
    >>> lines = render_text(table).splitlines()
    >>> lines[2]
    'add(S1)     | 0'

    """
    headers = [str(column.header) for column in table.columns]
    rows = [[str(cell) for cell in row] for row in table.rows]
    widths = [
        max([len(header)] + [len(row[i]) for row in rows])
        for i, header in enumerate(headers)
    ]
    lines = [
        ' | '.join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        '-+-'.join('-' * w for w in widths),
    ]
    for row in rows:
        lines.append(
            ' | '.join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
        )
    return '\n'.join(lines) + '\n'


def render_report(report):
    """Render a ``Report`` as text: a header, its payload tables and its
    checks."""
    payload = report.payload
    parts = ['{}: {}\n'.format(report.command, report.status)]
    if 'items' in payload:
        parts.append(render_text(catalog_table()(payload['items'])))
    if 'subcategories' in payload:
        parts.append(render_text(subcategories_table()([
            {'size': len(members), 'members': members}
            for members in payload['subcategories']
        ])))
    if 'pairs' in payload:
        parts.append(render_text(pairs_table()(payload['pairs'])))
    parts.append(render_text(checks_table()(report.checks)))
    return '\n'.join(parts)
