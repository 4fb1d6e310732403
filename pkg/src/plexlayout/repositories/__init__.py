"""Repositories for artifact storage."""

from plexlayout.repositories.artifact_repository import ArtifactRepository
from plexlayout.repositories.base import BaseRepository

__all__ = ["ArtifactRepository", "BaseRepository"]
