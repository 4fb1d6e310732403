"""Service layer."""

from plexlayout.services.base import BaseService
from plexlayout.services.pipeline_service import PipelineService, RankLayout

__all__ = ["BaseService", "PipelineService", "RankLayout"]
