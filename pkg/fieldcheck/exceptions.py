import logging

from mwsync.exceptions import MwsyncException, EXIT_INVALID

logger = logging.getLogger(__name__)


class InvalidGrid(MwsyncException):
    exit_code = EXIT_INVALID
    default_detail = 'The grid specification is invalid.'
    default_code = 'invalid_grid'


class EvaluationFailure(MwsyncException):
    default_detail = 'The map could not be evaluated on the grid.'
    default_code = 'evaluation_failure'

    def __init__(self, detail=None, code=None, location=None):
        super().__init__(detail, code)
        self.location = location


class DegenerateSplit(MwsyncException):
    default_detail = 'The conjugated contribution vanishes; the map is a plain synchronization map.'
    default_code = 'degenerate_split'
