"""Simulated distribution of a mesh over ranks with cell overlap."""

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from plexlayout.core.exceptions import ArgumentError, IntegrityError
from plexlayout.mesh.geometry import MeshGeometry
from plexlayout.parallel.partition import PartitionMap
from plexlayout.topology import Label, Plex, build_from_cones

logger = logging.getLogger(__name__)

ENTITY_CLASS_LABEL = "entity_class"


class SFLeaf(NamedTuple):
    point: int
    owner_rank: int
    owner_point: int


@dataclass(frozen=True)
class PointSF:
    """Leaves of one rank: local points whose data lives on another rank."""

    rank: int
    leaves: tuple[SFLeaf, ...] = ()

    def leaf_points(self) -> list[int]:
        return [leaf.point for leaf in self.leaves]

    def __len__(self) -> int:
        return len(self.leaves)


@dataclass(frozen=True, eq=False)
class LocalMesh:
    """One rank's share of a distributed mesh.

    ``l2g`` maps local points to global points; ``owned`` flags the points
    this rank owns, which are exactly the points that are not SF leaves.
    """

    rank: int
    plex: Plex
    l2g: np.ndarray
    num_ranks: int
    owned: np.ndarray

    @property
    def classes(self) -> Label | None:
        """Entity class label, once marked."""
        if self.plex.has_label(ENTITY_CLASS_LABEL):
            return self.plex.get_label(ENTITY_CLASS_LABEL)
        return None

    def owned_cells(self) -> list[int]:
        return [c for c in self.plex.cells() if self.owned[c]]

    def ghost_cells(self) -> list[int]:
        return [c for c in self.plex.cells() if not self.owned[c]]

    def g2l(self) -> dict[int, int]:
        return {int(g): p for p, g in enumerate(self.l2g)}


def _point_owners(plex: Plex, cell_owner: np.ndarray) -> tuple[np.ndarray, list[list[int]]]:
    """Lowest owning rank over each point's star cells, plus vertex-to-cell incidence."""
    owner = np.full(plex.chart_size, np.iinfo(np.int64).max, dtype=np.int64)
    cells_of_vertex: list[list[int]] = [[] for _ in range(plex.chart_size)]
    for i, c in enumerate(plex.cells()):
        closure = plex.closure(c, include_self=True)
        owner[closure] = np.minimum(owner[closure], cell_owner[i])
        for v in plex.closure_of_depth(c, 0):
            cells_of_vertex[v].append(i)
    return owner, cells_of_vertex


def _restrict_labels(source: Plex, target: Plex, l2g: np.ndarray) -> None:
    for name in source.label_names:
        label = source.get_label(name)
        for p, g in enumerate(l2g.tolist()):
            value = label.value(g)
            if value is not None:
                target.label_set(name, value, p)


def distribute(mesh: MeshGeometry, part: PartitionMap, overlap: int = 1) -> list[tuple[LocalMesh, PointSF]]:
    """Build every rank's local mesh and point star forest.

    Each rank holds the closures of its owned cells and, with ``overlap=1``,
    of every cell sharing a vertex with an owned cell. Local points keep the
    stratified layout of the global chart, ascending global id within each
    stratum. A shared point belongs to the lowest rank owning a cell in its
    star; all other holders see it as a leaf.
    """
    plex = mesh.plex
    cells = plex.cells()
    if part.num_cells != len(cells):
        raise IntegrityError(
            f"Partition covers {part.num_cells} cells, mesh has {len(cells)}",
            details={"partition_cells": part.num_cells, "mesh_cells": len(cells)},
        )
    if overlap not in (0, 1):
        raise ArgumentError("Overlap must be 0 or 1", details={"overlap": overlap})

    owner, cells_of_vertex = _point_owners(plex, part.cell_owner)
    k = part.num_ranks

    l2gs: list[np.ndarray] = []
    for rank in range(k):
        held = set(part.cells_of(rank).tolist())
        if overlap:
            for i in list(held):
                for v in plex.closure_of_depth(cells[i], 0):
                    held.update(cells_of_vertex[v])
        points: set[int] = set()
        for i in held:
            points.update(plex.closure(cells[i], include_self=True))
        # ascending global ids keep the global stratum order
        l2gs.append(np.array(sorted(points), dtype=np.int64))

    g2ls = [{int(g): p for p, g in enumerate(l2g)} for l2g in l2gs]
    ranks: list[tuple[LocalMesh, PointSF]] = []
    for rank, l2g in enumerate(l2gs):
        g2l = g2ls[rank]
        cones = [[g2l[q] for q in plex.cone(int(g))] for g in l2g]
        local_plex = build_from_cones(len(l2g), cones)
        _restrict_labels(plex, local_plex, l2g)

        point_owner = owner[l2g]
        leaves = tuple(
            SFLeaf(p, int(o), g2ls[o][int(g)])
            for p, (g, o) in enumerate(zip(l2g, point_owner, strict=True))
            if o != rank
        )
        local = LocalMesh(
            rank=rank,
            plex=local_plex,
            l2g=l2g,
            num_ranks=k,
            owned=point_owner == rank,
        )
        ranks.append((local, PointSF(rank=rank, leaves=leaves)))
        logger.debug(
            "Distributed rank",
            extra={"rank": rank, "points": len(l2g), "leaves": len(leaves), "ghost_cells": len(local.ghost_cells())},
        )

    logger.info(f"Distributed mesh over {k} ranks", extra={"ranks": k, "overlap": overlap})
    return ranks
