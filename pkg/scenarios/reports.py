'''
Plain text reports, one "key: value" per line.
'''
import enum
import logging

from collections import OrderedDict

from scenarios.csvgrid import FLOAT_FORMAT

logger = logging.getLogger(__name__)


def format_value(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return FLOAT_FORMAT % value
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, (tuple, list)):
        return ' '.join(format_value(v) for v in value)

    return str(value)


def prefixed(prefix, items):
    return OrderedDict(('{}_{}'.format(prefix, key), value)
                       for key, value in items.items())


def format_report(items):
    return ''.join('{}: {}\n'.format(key, format_value(value))
                   for key, value in items.items())


def write_report(items, stdout, out=None):
    '''
    Print the report and, when `out` is given, also write it to that file.
    '''
    text = format_report(items)
    stdout.write(text, ending='')

    if out:
        with open(out, 'w') as f:
            f.write(text)

    return text
