"""Logging configuration and per-stage timing."""

import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager

from plexlayout.core.config import settings
from plexlayout.core.exceptions import PlexLayoutError


def setup_logging(level: str | None = None) -> None:
    """Configure application logging.

    Diagnostics go to stderr; stdout is reserved for data written by the CLI.
    """
    log_level = getattr(logging, (level or settings.LOG_LEVEL).upper(), logging.INFO)

    # Create formatter
    formatter = logging.Formatter(
        fmt="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    # Configure root logger
    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    # Remove existing handlers
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    logging.getLogger("plexlayout").setLevel(log_level)


@contextmanager
def log_stage(stage: str, **context: object) -> Iterator[None]:
    """Log the start and completion of a pipeline stage with its duration."""
    logger = logging.getLogger("plexlayout.stage")
    start_time = time.perf_counter()
    logger.info(f"{stage} started", extra={"stage": stage, **context})

    try:
        yield
    except Exception as exc:
        duration = time.perf_counter() - start_time
        logger.error(
            f"{stage} failed ({duration:.3f}s)",
            extra={"stage": stage, "duration": duration, "error": type(exc).__name__, **context},
        )
        if isinstance(exc, PlexLayoutError) and exc.stage is None:
            exc.stage = stage
        raise

    duration = time.perf_counter() - start_time
    logger.info(
        f"{stage} finished ({duration:.3f}s)",
        extra={"stage": stage, "duration": duration, **context},
    )
