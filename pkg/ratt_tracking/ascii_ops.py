"""Cell-level helpers for the CSV files written and read by the harness."""
import math

from . import tracking_const
from .tracking_errors import CsvMalformed


def formatFloat(value):
    """17 significant digits, enough to round-trip a double."""
    value = float(value)
    if math.isnan(value):
        return 'nan'
    return '{:.{}g}'.format(value, tracking_const.FLOAT_DIGITS)


def formatCell(value):
    if isinstance(value, float):
        return formatFloat(value)
    return str(value)


def getFloat(value, line=None):
    """Read value and returns a float. Raise on garbage."""
    try:
        return float(value)
    except (TypeError, ValueError):
        raise CsvMalformed('not a number: {!r}'.format(value), line)


def getInt(value, line=None):
    """Read value and returns an int. Raise on garbage."""
    try:
        return int(value)
    except (TypeError, ValueError):
        raise CsvMalformed('not an integer: {!r}'.format(value), line)


def isComment(line):
    return line.lstrip().startswith('#')


def readComments(lines):
    """Metadata written as '# key=value' lines before the header."""
    meta = {}
    for line in lines:
        if not isComment(line):
            break
        body = line.lstrip()[1:].strip()
        if '=' in body:
            key, value = body.split('=', 1)
            meta[key.strip()] = value.strip()
    return meta


def dataLines(lines):
    """(line number, text) of every non-blank, non-comment line."""
    for number, line in enumerate(lines, start=1):
        if line.strip() and not isComment(line):
            yield number, line
