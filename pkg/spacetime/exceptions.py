import logging

from mwsync.exceptions import MwsyncException, EXIT_INVALID

logger = logging.getLogger(__name__)


class NonFiniteComponent(MwsyncException):
    default_detail = 'Split-complex components must be finite.'
    default_code = 'non_finite_component'


class InvalidLightspeed(MwsyncException):
    exit_code = EXIT_INVALID
    default_detail = 'The speed of light must be positive.'
    default_code = 'invalid_lightspeed'


class SpeedLimitExceeded(MwsyncException):
    default_detail = 'Speed is not below the speed of light.'
    default_code = 'speed_limit_exceeded'


class IndeterminateComposition(MwsyncException):
    default_detail = 'Composing +c with -c is indeterminate.'
    default_code = 'indeterminate_composition'


class SameOrientation(MwsyncException):
    default_detail = 'Lightrays of the same orientation have no unique intersection.'
    default_code = 'same_orientation'


class InvalidObserver(MwsyncException):
    exit_code = EXIT_INVALID
    default_detail = 'The observer parameters are invalid.'
    default_code = 'invalid_observer'


class DomainExceeded(MwsyncException):
    default_detail = 'Parameter outside the sampled window of the observer.'
    default_code = 'domain_exceeded'


class NotTimelike(MwsyncException):
    default_detail = 'The curve is not chronologically monotone.'
    default_code = 'not_timelike'

    def __init__(self, detail=None, code=None, pair=None):
        super().__init__(detail, code)
        self.pair = pair


class NoRadarCoordinate(MwsyncException):
    default_detail = 'The event has no radar coordinates for this observer.'
    default_code = 'no_radar_coordinate'

    def __init__(self, detail=None, code=None, event=None):
        super().__init__(detail, code)
        self.event = event


class NotDifferentiable(MwsyncException):
    default_detail = 'The observer has no analytic derivative.'
    default_code = 'not_differentiable'


class DegenerateFactor(MwsyncException):
    default_detail = 'The conformal factor is not positive.'
    default_code = 'degenerate_factor'
