"""Verification reports.

A ``Report`` collects named checks. Each check either passed, failed (with a
witness) or could not be decided at the given bounds. The report status is
``fail`` if any check failed, else ``unverified`` if any check is undecided,
else ``pass``.

Reports never carry timestamps, so emitting the same report twice gives the
same bytes.

"""
from contextlib import contextmanager
import json
import logging

from django.core.exceptions import ValidationError

from quiverlab import tables
from quiverlab.exceptions import PreconditionError

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
UNVERIFIED = 'unverified'
OUTPUT_FORMATS = ('json', 'table')


class Report(object):
    """Named checks plus a free-form payload.

    >>> report = Report('thick closure')
    >>> report.add('extensions', True)
    >>> report.status
    'pass'
    >>> report.add('cones', None)
    >>> report.status
    'unverified'
    >>> report.add('cocones', False, {'source': 'S1'})
    >>> report.status, [check['name'] for check in report.failures()]
    ('fail', ['cocones'])

    """

    def __init__(self, command, **payload):
        self.command = command
        self.checks = []
        self.payload = dict(payload)
        self.meta = {}

    def __repr__(self):
        return 'Report({!r}, status={!r})'.format(self.command, self.status)

    def add(self, name, passed, witness=None):
        """Record a check. ``passed`` is ``True``, ``False`` or ``None``."""
        check = {'name': name, 'passed': passed}
        if witness is not None:
            check['witness'] = witness
        if passed is False:
            logger.debug('check %s failed: %r', name, witness)
        self.checks.append(check)

    def extend(self, other, prefix=None):
        """Copy the checks of ``other``, optionally prefixing their names."""
        for check in other.checks:
            name = check['name'] if prefix is None else \
                '{}:{}'.format(prefix, check['name'])
            self.add(name, check['passed'], check.get('witness'))

    @contextmanager
    def guard(self, name):
        """Record a failed check ``name`` if the block raises.

        Malformed morphisms, such as those produced by a broken functor, raise
        ``ValidationError`` or ``ValueError`` deep inside a check.

        """
        try:
            yield
        except (ValidationError, ValueError, PreconditionError) as error:
            self.add(name, False, {'error': _message(error)})

    def failures(self):
        """Return the failed checks."""
        return [check for check in self.checks if check['passed'] is False]

    @property
    def passed(self):
        """Tell whether no check failed or was left undecided."""
        return self.status == PASS

    @property
    def status(self):
        """One of ``pass``, ``fail`` or ``unverified``."""
        if any(check['passed'] is False for check in self.checks):
            return FAIL
        if any(check['passed'] is None for check in self.checks):
            return UNVERIFIED
        return PASS

    def as_dict(self):
        """Return the report as plain data."""
        result = dict(self.payload)
        result.update(self.meta)
        result['command'] = self.command
        result['status'] = self.status
        result['checks'] = list(self.checks)
        return result


def _message(error):
    if isinstance(error, ValidationError):
        return '; '.join(error.messages)
    return str(error)


def report_emit(report, output='json'):
    """Serialize ``report`` as JSON with sorted keys, or as aligned tables.

    >>> report = Report('indec enumerate', items=[])
    >>> report_emit(report).decode('utf-8').splitlines()[1]
    '  "checks": [],'

    """
    if output == 'json':
        text = json.dumps(report.as_dict(), sort_keys=True, indent=2) + '\n'
    elif output == 'table':
        text = tables.render_report(report)
    else:
        raise ValidationError('Unknown output format {}.'.format(output))
    return text.encode('utf-8')
