"""Point-to-DoF-range tables laid out in permuted point order."""

import logging
from dataclasses import dataclass

import numpy as np

from plexlayout.core.exceptions import ArgumentError, LayoutError, PointRangeError
from plexlayout.layout.dofs import DofLayout
from plexlayout.ordering.permutation import Permutation
from plexlayout.parallel.distribute import LocalMesh

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Section:
    """DoF count and offset of every point.

    Offsets are an exclusive prefix sum of the counts taken in the order of
    ``ordering``, so the data array follows the point permutation.
    """

    dof_counts: np.ndarray
    offsets: np.ndarray
    ordering: Permutation
    layout: DofLayout

    @property
    def chart_size(self) -> int:
        return int(self.dof_counts.size)

    @property
    def total_size(self) -> int:
        return int(self.dof_counts.sum())

    def _check_point(self, p: int) -> int:
        p = int(p)
        if not 0 <= p < self.chart_size:
            raise PointRangeError(
                f"Point {p} outside section chart [0, {self.chart_size})",
                details={"point": p, "chart_size": self.chart_size},
            )
        return p

    def dof_count(self, p: int) -> int:
        return int(self.dof_counts[self._check_point(p)])

    def offset(self, p: int) -> int:
        return int(self.offsets[self._check_point(p)])

    def dofs(self, p: int) -> range:
        """DoF indices of ``p``."""
        p = self._check_point(p)
        start = int(self.offsets[p])
        return range(start, start + int(self.dof_counts[p]))

    def point_dof_indices(self) -> np.ndarray:
        """DoF indices of every point, concatenated in point order."""
        counts = self.dof_counts
        within = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
        return np.repeat(self.offsets, counts) + within

    def validate(self) -> None:
        """Check that the DoF ranges tile ``[0, total_size)``."""
        covered = np.zeros(self.total_size, dtype=np.int64)
        indices = self.point_dof_indices()
        if indices.size and (indices.min() < 0 or indices.max() >= self.total_size):
            raise LayoutError("Section range falls outside its total size")
        np.add.at(covered, indices, 1)
        if covered.size and not (covered == 1).all():
            slot = int(np.flatnonzero(covered != 1)[0])
            raise LayoutError(
                f"DoF {slot} is covered {int(covered[slot])} times",
                details={"dof": slot, "cover": int(covered[slot])},
            )


def create_section(local: LocalMesh, perm: Permutation, layout: DofLayout) -> Section:
    """Section of ``layout`` over the local plex, offsets in permuted order."""
    plex = local.plex
    if perm.size != plex.chart_size:
        raise ArgumentError(
            f"Permutation of size {perm.size} does not cover chart of size {plex.chart_size}",
            details={"permutation": perm.size, "chart_size": plex.chart_size},
        )
    if layout.dim != plex.max_depth:
        raise LayoutError(
            f"Layout for dimension {layout.dim} on a plex of depth {plex.max_depth}",
            details={"dim": layout.dim, "max_depth": plex.max_depth},
        )
    counts = np.asarray(layout.dofs_per_depth, dtype=np.int64)[plex.depths]
    order = perm.old_of_new
    starts = np.cumsum(counts[order]) - counts[order]
    offsets = np.empty_like(counts)
    offsets[order] = starts
    section = Section(dof_counts=counts, offsets=offsets, ordering=perm, layout=layout)
    logger.debug("Created section", extra={"rank": local.rank, "total_size": section.total_size})
    return section


def renumber_dof_values(values: np.ndarray, source: Section, target: Section) -> np.ndarray:
    """Move a DoF array laid out by ``source`` into the layout of ``target``."""
    if not np.array_equal(source.dof_counts, target.dof_counts):
        raise LayoutError("Sections disagree on per-point DoF counts")
    values = np.asarray(values)
    if values.shape[0] != source.total_size:
        raise ArgumentError(
            f"Expected {source.total_size} values, got {values.shape[0]}",
            details={"expected": source.total_size, "got": int(values.shape[0])},
        )
    out = np.empty_like(values)
    out[target.point_dof_indices()] = values[source.point_dof_indices()]
    return out
