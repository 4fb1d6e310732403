"""Pydantic schemas for configuration, reports and errors."""

from plexlayout.schemas.common import ErrorResponse
from plexlayout.schemas.report import (
    ClassCounts,
    ClassReport,
    ClassTally,
    MeshInfo,
    OrderingReport,
    StratumInfo,
    TimingReport,
)
from plexlayout.schemas.run_config import OrderingName, RunConfig

__all__ = [
    "ClassCounts",
    "ClassReport",
    "ClassTally",
    "ErrorResponse",
    "MeshInfo",
    "OrderingName",
    "OrderingReport",
    "RunConfig",
    "StratumInfo",
    "TimingReport",
]
