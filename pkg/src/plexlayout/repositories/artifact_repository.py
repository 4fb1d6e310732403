"""Artifact repository writing command outputs to files or stdout."""

import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import BinaryIO, TextIO

from plexlayout.core.config import settings
from plexlayout.core.exceptions import OutputError
from plexlayout.repositories.base import BaseRepository

logger = logging.getLogger(__name__)


class ArtifactRepository(BaseRepository):
    """Repository for command output artifacts.

    With an output directory every artifact becomes a file there. Without
    one, a command's single text document goes to ``stream``; any further
    artifacts are written to the configured default output directory.
    """

    def __init__(self, out_dir: Path | None = None, stream: TextIO | None = None):
        """Initialize the ArtifactRepository.

        Args:
            out_dir: Directory receiving all artifacts, or None for stdout mode.
            stream: Text stream of stdout mode; defaults to ``sys.stdout``.
        """
        self.out_dir = out_dir
        self.stream = stream
        self.written: list[Path] = []

    def _path(self, name: str) -> Path:
        directory = self.out_dir if self.out_dir is not None else settings.output_path
        try:
            directory.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise OutputError(f"Cannot create output directory {directory}: {exc}") from exc
        return directory / name

    def _record(self, path: Path) -> Path:
        self.written.append(path)
        logger.info(f"Wrote {path}", extra={"path": str(path)})
        return path

    def write_text(self, name: str, text: str, document: bool = True) -> Path | None:
        """Write a text artifact.

        Args:
            name: File name inside the output directory.
            text: Content.
            document: Whether this is the command's single document, which
                goes to the stream when no output directory is set.

        Returns:
            The written path, or None when the text went to the stream.
        """
        if self.out_dir is None and document:
            (self.stream or sys.stdout).write(text)
            return None
        path = self._path(name)
        try:
            path.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise OutputError(f"Failed to write {path}: {exc}", details={"path": str(path)}) from exc
        return self._record(path)

    def write_binary(self, name: str, writer: Callable[[BinaryIO], None]) -> Path:
        """Write a binary artifact produced by ``writer`` into a file."""
        path = self._path(name)
        try:
            with path.open("wb") as sink:
                writer(sink)
        except OSError as exc:
            raise OutputError(f"Failed to write {path}: {exc}", details={"path": str(path)}) from exc
        return self._record(path)
