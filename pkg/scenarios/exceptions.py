import logging

from mwsync.exceptions import MwsyncException, EXIT_INVALID

logger = logging.getLogger(__name__)


class ScenarioInvalid(MwsyncException):
    exit_code = EXIT_INVALID
    default_detail = 'The scenario file is invalid.'
    default_code = 'scenario_invalid'
