"""Exception-to-exit-code handlers for the command line."""

import logging
import sys
from typing import TextIO

from pydantic import ValidationError

from plexlayout.core.exceptions import DATA_ERROR_EXIT_CODE, USAGE_ERROR_EXIT_CODE, PlexLayoutError
from plexlayout.schemas.common import ErrorResponse

logger = logging.getLogger(__name__)


def _emit(response: ErrorResponse, stream: TextIO | None) -> int:
    (stream or sys.stderr).write(response.model_dump_json() + "\n")
    return response.exit_code


def plexlayout_error_handler(exc: PlexLayoutError, stream: TextIO | None = None) -> int:
    """Handle library exceptions."""
    logger.error(
        f"{exc.__class__.__name__}: {exc.message}",
        extra={"exit_code": exc.exit_code, "stage": exc.stage, "details": exc.details},
    )
    response = ErrorResponse(
        error=exc.__class__.__name__,
        message=exc.message,
        exit_code=exc.exit_code,
        stage=exc.stage,
        details=exc.details or None,
    )
    return _emit(response, stream)


def validation_error_handler(exc: ValidationError, stream: TextIO | None = None) -> int:
    """Handle Pydantic validation errors of the run configuration."""
    errors = exc.errors(include_url=False, include_context=False, include_input=False)
    logger.warning("Argument validation failed", extra={"errors": errors})
    response = ErrorResponse(
        error="UsageError",
        message="; ".join(f"{'.'.join(map(str, e['loc'])) or 'arguments'}: {e['msg']}" for e in errors),
        exit_code=USAGE_ERROR_EXIT_CODE,
        stage="arguments",
        details={"errors": errors},
    )
    return _emit(response, stream)


def general_error_handler(exc: Exception, stream: TextIO | None = None) -> int:
    """Handle any unhandled exceptions."""
    logger.exception("Unhandled exception", exc_info=exc)
    response = ErrorResponse(
        error="InternalError",
        message="An unexpected error occurred",
        exit_code=DATA_ERROR_EXIT_CODE,
        details={"error": str(exc)} if logger.isEnabledFor(logging.DEBUG) else None,
    )
    return _emit(response, stream)
