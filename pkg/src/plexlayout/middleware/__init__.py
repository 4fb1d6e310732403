"""Middleware package for plexlayout."""

from plexlayout.middleware.logging import log_stage, setup_logging

__all__ = [
    "log_stage",
    "setup_logging",
]
