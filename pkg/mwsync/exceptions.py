import logging

logger = logging.getLogger(__name__)

# Exit codes shared by every management command.
EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2
EXIT_RUNTIME = 3


class MwsyncException(Exception):
    '''
    Base class for every error raised by the mwsync apps.

    Subclasses override `default_detail`, `default_code` and, when the
    failure is not a runtime/domain error, `exit_code`.
    '''
    exit_code = EXIT_RUNTIME
    default_detail = 'A numerical operation failed.'
    default_code = 'error'

    def __init__(self, detail=None, code=None):
        self.detail = detail if detail is not None else self.default_detail
        self.code = code if code is not None else self.default_code

        super().__init__(self.detail)

    def __str__(self):
        return str(self.detail)
