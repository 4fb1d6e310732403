"""Mesh topology paired with vertex coordinates."""

from dataclasses import dataclass

import numpy as np

from plexlayout.core.exceptions import IntegrityError
from plexlayout.topology import Label, Plex

BOUNDARY_LABEL = "Face Sets"
CELL_LABEL = "Cell Sets"


@dataclass(frozen=True, eq=False)
class MeshGeometry:
    """A plex together with one coordinate tuple per vertex.

    Row ``i`` of ``coordinates`` belongs to the ``i``-th point of the vertex
    stratum. ``boundary_labels`` is the plex label holding facet markers.
    """

    plex: Plex
    coordinates: np.ndarray
    cell_dimension: int
    boundary_labels: Label

    def __post_init__(self) -> None:
        num_vertices = len(self.plex.vertices())
        if self.coordinates.ndim != 2 or self.coordinates.shape[0] != num_vertices:
            raise IntegrityError(
                f"Expected {num_vertices} coordinate rows, got {self.coordinates.shape[0]}",
                details={"vertices": num_vertices, "rows": int(self.coordinates.shape[0])},
            )
        if self.cell_dimension != self.plex.max_depth:
            raise IntegrityError(
                f"Cell dimension {self.cell_dimension} differs from plex depth {self.plex.max_depth}",
                details={"cell_dimension": self.cell_dimension, "max_depth": self.plex.max_depth},
            )

    @property
    def geometric_dimension(self) -> int:
        return int(self.coordinates.shape[1])

    @property
    def num_cells(self) -> int:
        return len(self.plex.cells())

    def coordinate(self, p: int) -> np.ndarray:
        """Coordinates of vertex point ``p``."""
        return self.coordinates[self.plex.vertices().index(p)]
