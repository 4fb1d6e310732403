"""Base repository for artifact storage abstraction."""

from abc import ABC, abstractmethod
from collections.abc import Callable
from pathlib import Path
from typing import BinaryIO

from pydantic import BaseModel


class BaseRepository(ABC):
    """Destination of named text and binary artifacts."""

    @abstractmethod
    def write_text(self, name: str, text: str, document: bool = True) -> Path | None:
        """Store a text artifact; returns its path when it became a file."""

    @abstractmethod
    def write_binary(self, name: str, writer: Callable[[BinaryIO], None]) -> Path:
        """Store the bytes ``writer`` produces under ``name``."""

    def write_json(self, name: str, model: BaseModel, document: bool = True) -> Path | None:
        return self.write_text(name, model.model_dump_json(indent=2, by_alias=True) + "\n", document)
