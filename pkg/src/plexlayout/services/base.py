"""Base service module for pipeline logic."""

from abc import ABC

from plexlayout.repositories.base import BaseRepository
from plexlayout.schemas.run_config import RunConfig


class BaseService(ABC):
    """Base service for pipeline logic.

    Services compose library operations for one validated run and hand the
    results to a repository.
    """

    def __init__(self, config: RunConfig, repository: BaseRepository):
        self.config = config
        self.repository = repository
