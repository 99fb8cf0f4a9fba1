import logging

from mwsync.exceptions import MwsyncException

logger = logging.getLogger(__name__)


class QuadratureDidNotConverge(MwsyncException):
    default_detail = 'Adaptive quadrature did not reach the requested tolerance.'
    default_code = 'quadrature_did_not_converge'


class NonMonotoneRadarTime(MwsyncException):
    default_detail = 'Radar time is not increasing along the sampled worldline.'
    default_code = 'non_monotone_radar_time'
