import json
import logging
import sys
import traceback
from functools import wraps

from .errors import ConfigError

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2


def exit_status(passed: bool) -> int:
    return EXIT_PASSED if passed else EXIT_FAILED


def job_call(job_fn: callable) -> callable:
    """ Turns any exception raised by a CLI job into exit status 2

    The error is logged and a JSON payload with the error class, message
    and stack trace is written to stderr.
    """
    logger = logging.getLogger('pylogharmonic.cli')

    @wraps(job_fn)
    def wrapper(*args, **kwargs) -> int:
        try:
            return job_fn(*args, **kwargs)
        except Exception as exc:
            logger.exception('Job failed')
            payload = {
                'error_code': exc.__class__.__name__,
                'message': str(exc),
                'stack_trace': traceback.format_exc()
            }
            if isinstance(exc, ConfigError):
                payload.update(field=exc.field, line=exc.line)
            sys.stderr.write(json.dumps(payload, sort_keys=True) + '\n')
            return EXIT_INPUT_ERROR

    wrapper.__wrapped_by_job_call__ = True
    return wrapper
