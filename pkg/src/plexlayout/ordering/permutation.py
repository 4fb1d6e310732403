"""Point permutations and the class-segmented compact cell-closure ordering."""

import io
import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from plexlayout.core.exceptions import ArgumentError, PreconditionError
from plexlayout.parallel.classes import EntityClass
from plexlayout.parallel.distribute import LocalMesh
from plexlayout.topology import Plex

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Permutation:
    """Bijective renumbering of a chart.

    ``new_of_old[p]`` is the new position of old point ``p``.
    ``segment_bounds`` holds four positions: the starts of the core,
    non-core and halo blocks followed by the chart size.
    """

    new_of_old: np.ndarray
    segment_bounds: tuple[int, int, int, int] | None = None

    def __post_init__(self) -> None:
        new_of_old = np.asarray(self.new_of_old, dtype=np.int64)
        n = new_of_old.size
        if new_of_old.ndim != 1 or not np.array_equal(np.sort(new_of_old), np.arange(n)):
            raise ArgumentError("Permutation is not a bijection on its chart", details={"size": int(n)})
        new_of_old.flags.writeable = False
        object.__setattr__(self, "new_of_old", new_of_old)
        bounds = self.segment_bounds or (0, n, n, n)
        bounds = tuple(int(b) for b in bounds)
        if len(bounds) != 4 or bounds[0] != 0 or bounds[-1] != n or list(bounds) != sorted(bounds):
            raise ArgumentError("Segment bounds must be ascending from 0 to the chart size", details={"bounds": bounds})
        object.__setattr__(self, "segment_bounds", bounds)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(np.arange(n, dtype=np.int64))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Permutation":
        """Permutation placing ``order[i]`` at position ``i``."""
        order = np.asarray(order, dtype=np.int64)
        if not np.array_equal(np.sort(order), np.arange(order.size)):
            raise ArgumentError("Order does not list every point exactly once", details={"size": int(order.size)})
        new_of_old = np.empty_like(order)
        new_of_old[order] = np.arange(order.size)
        return cls(new_of_old)

    @property
    def size(self) -> int:
        return int(self.new_of_old.size)

    @property
    def old_of_new(self) -> np.ndarray:
        old = np.empty_like(self.new_of_old)
        old[self.new_of_old] = np.arange(self.size)
        return old

    def inverse(self) -> "Permutation":
        return Permutation(self.old_of_new)

    def block(self, cls: EntityClass) -> range:
        return range(self.segment_bounds[cls], self.segment_bounds[cls + 1])

    def to_csv(self) -> str:
        buffer = io.StringIO()
        for cls in EntityClass:
            buffer.write(f"# {cls.key},{self.segment_bounds[cls]},{self.segment_bounds[cls + 1]}\n")
        buffer.write("old_id,new_id\n")
        for old, new in enumerate(self.new_of_old.tolist()):
            buffer.write(f"{old},{new}\n")
        return buffer.getvalue()


def compact_class_permutation(local: LocalMesh, cell_order: Sequence[int]) -> Permutation:
    """Class-segmented permutation built from cell closures.

    Cells are walked in ``cell_order``. Each inclusive closure point, in
    ascending order, takes the next free position in the block of its own
    entity class when first touched. Blocks are core, non-core, then halo.

    Raises:
        PreconditionError: entity classes are missing or incomplete.
        ArgumentError: ``cell_order`` is not a permutation of the cells.
    """
    plex = local.plex
    label = local.classes
    if label is None:
        raise PreconditionError(f"Rank {local.rank} has no entity classes", details={"rank": local.rank})
    order = [int(c) for c in cell_order]
    if sorted(order) != list(plex.cells()):
        raise ArgumentError(
            "Cell order must list every cell exactly once",
            details={"cells": len(plex.cells()), "given": len(order)},
        )

    class_of = np.full(plex.chart_size, -1, dtype=np.int64)
    for cls in EntityClass:
        class_of[label.stratum(cls)] = cls
    unlabelled = np.flatnonzero(class_of < 0)
    if unlabelled.size:
        raise PreconditionError(
            f"Point {int(unlabelled[0])} has no entity class",
            details={"rank": local.rank, "unlabelled": int(unlabelled.size)},
        )

    counts = np.bincount(class_of, minlength=len(EntityClass))
    bounds = np.concatenate([[0], np.cumsum(counts)])
    next_free = bounds[:-1].copy()
    new_of_old = np.full(plex.chart_size, -1, dtype=np.int64)
    for c in order:
        for q in plex.closure(c, include_self=True):
            if new_of_old[q] < 0:
                cls = class_of[q]
                new_of_old[q] = next_free[cls]
                next_free[cls] += 1

    perm = Permutation(new_of_old, segment_bounds=tuple(int(b) for b in bounds))
    logger.debug("Built compact permutation", extra={"rank": local.rank, "bounds": perm.segment_bounds})
    return perm


def apply_permutation(plex: Plex, perm: Permutation) -> Plex:
    """Renamed copy of ``plex`` whose point ``perm.new_of_old[p]`` is old point ``p``."""
    if perm.size != plex.chart_size:
        raise ArgumentError(
            f"Permutation of size {perm.size} does not match chart size {plex.chart_size}",
            details={"permutation": perm.size, "chart_size": plex.chart_size},
        )
    return plex.renamed(perm.new_of_old)
