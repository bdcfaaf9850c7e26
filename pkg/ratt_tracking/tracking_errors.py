"""Exceptions raised by the tracking library."""


class TrackingError(Exception):
    """Base class for every library error."""


class CoincidentPose(TrackingError):
    """Robot and target positions coincide; the sensor model is singular."""


class SingularPrior(TrackingError):
    """Prior covariance cannot be inverted."""


class BudgetExceeded(TrackingError):
    """Attack budget larger than the team can absorb."""


class ScaleExceeded(TrackingError):
    """Exhaustive enumeration above the configured evaluation cap."""

    def __init__(self, needed, cap):
        super().__init__(
            'enumeration needs {} evaluations, cap is {}'.format(needed, cap))
        self.needed = needed
        self.cap = cap


class NotMonotone(TrackingError):
    pass


class NotSubmodular(TrackingError):
    pass


class ZeroSingleton(TrackingError):
    pass


class ConfigInvalid(TrackingError):
    """Bad campaign file. Carries the offending field and YAML line."""

    def __init__(self, message, field=None, line=None):
        where = []
        if field:
            where.append('field {!r}'.format(field))
        if line:
            where.append('line {}'.format(line))
        if where:
            message = '{} ({})'.format(message, ', '.join(where))
        super().__init__(message)
        self.field = field
        self.line = line


class CsvMalformed(TrackingError):

    def __init__(self, message, line=None):
        if line:
            message = '{} (line {})'.format(message, line)
        super().__init__(message)
        self.line = line
