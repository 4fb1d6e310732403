"""Deterministic greedy breadth-first cell partitioner."""

import csv
import heapq
import io
import logging
import math
from collections import deque
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from plexlayout.core.exceptions import ArgumentError, IntegrityError
from plexlayout.mesh.geometry import MeshGeometry
from plexlayout.topology import Plex

logger = logging.getLogger(__name__)

CSV_HEADER = ("cell_id", "rank")


@dataclass(frozen=True, eq=False)
class PartitionMap:
    """Owner rank of every cell, indexed by position in the cell stratum."""

    cell_owner: np.ndarray
    num_ranks: int

    def __post_init__(self) -> None:
        owner = np.asarray(self.cell_owner, dtype=np.int64)
        if self.num_ranks < 1:
            raise IntegrityError("Partition needs at least one rank", details={"num_ranks": self.num_ranks})
        if owner.ndim != 1:
            raise IntegrityError("cell_owner must be one-dimensional")
        if owner.size and (owner.min() < 0 or owner.max() >= self.num_ranks):
            bad = int(np.flatnonzero((owner < 0) | (owner >= self.num_ranks))[0])
            raise IntegrityError(
                f"Cell {bad} has owner {int(owner[bad])} outside [0, {self.num_ranks})",
                details={"cell": bad, "owner": int(owner[bad])},
            )
        owner.flags.writeable = False
        object.__setattr__(self, "cell_owner", owner)

    @property
    def num_cells(self) -> int:
        return int(self.cell_owner.size)

    def cells_of(self, rank: int) -> np.ndarray:
        """Cells owned by ``rank``, ascending."""
        return np.flatnonzero(self.cell_owner == rank)

    def rank_sizes(self) -> np.ndarray:
        return np.bincount(self.cell_owner, minlength=self.num_ranks)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(enumerate(self.cell_owner.tolist()))
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str, num_ranks: int | None = None) -> "PartitionMap":
        """Parse ``cell_id,rank`` rows; rows may come in any order."""
        reader = csv.reader(io.StringIO(text))
        rows = [row for row in reader if row]
        if rows and tuple(rows[0]) == CSV_HEADER:
            rows = rows[1:]
        try:
            pairs = sorted((int(c), int(r)) for c, r in rows)
        except ValueError:
            raise IntegrityError("Partition CSV rows must be 'cell_id,rank' integer pairs") from None
        cell_ids = [c for c, _ in pairs]
        if cell_ids != list(range(len(pairs))):
            raise IntegrityError(
                "Partition CSV must list every cell id from 0 exactly once",
                details={"rows": len(pairs)},
            )
        owner = np.array([r for _, r in pairs], dtype=np.int64)
        if num_ranks is None:
            num_ranks = int(owner.max()) + 1 if owner.size else 1
        return cls(cell_owner=owner, num_ranks=num_ranks)


def facet_dual_graph(plex: Plex) -> list[list[int]]:
    """Facet-sharing neighbours of every cell, ascending, by cell stratum position."""
    cells = plex.cells()
    position = {c: i for i, c in enumerate(cells)}
    neighbours: list[set[int]] = [set() for _ in cells]
    for facet in plex.height_stratum(1):
        support = [position[c] for c in plex.support(facet)]
        for a in support:
            neighbours[a].update(b for b in support if b != a)
    return [sorted(n) for n in neighbours]


def _distances(graph: list[list[int]], sources: list[int]) -> np.ndarray:
    """Multi-source BFS hop counts; unreachable cells get ``len(graph)``."""
    dist = np.full(len(graph), len(graph), dtype=np.int64)
    queue = deque(sources)
    dist[sources] = 0
    while queue:
        c = queue.popleft()
        for n in graph[c]:
            if dist[n] > dist[c] + 1:
                dist[n] = dist[c] + 1
                queue.append(n)
    return dist


def _spread_seeds(graph: list[list[int]], k: int) -> list[int]:
    seeds = [0]
    while len(seeds) < k:
        # argmax returns the lowest id among the farthest cells
        seeds.append(int(np.argmax(_distances(graph, seeds))))
    return seeds


def _grow(graph: list[list[int]], owner: np.ndarray, seed: int, rank: int, target: int) -> int:
    """Claim up to ``target`` unassigned cells connected to ``seed``, lowest frontier id first."""
    owner[seed] = rank
    count = 1
    frontier = [n for n in graph[seed] if owner[n] < 0]
    heapq.heapify(frontier)
    while frontier and count < target:
        c = heapq.heappop(frontier)
        if owner[c] >= 0:
            continue
        owner[c] = rank
        count += 1
        for n in graph[c]:
            if owner[n] < 0:
                heapq.heappush(frontier, n)
    return count


def _dual_matrix(graph: list[list[int]]) -> sp.csr_matrix:
    indptr = np.zeros(len(graph) + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(n) for n in graph])
    indices = np.fromiter((n for row in graph for n in row), dtype=np.int64, count=int(indptr[-1]))
    return sp.csr_matrix((np.ones(indices.size, dtype=np.int8), indices, indptr), shape=(len(graph), len(graph)))


def _reconnect(dual: sp.csr_matrix, owner: np.ndarray, k: int) -> int:
    """Hand every stray component of a region to its smallest facet neighbour region.

    The largest component of each region stays (lowest label on ties). A stray
    component goes to the adjacent rank with the fewest cells, lowest rank on
    ties. Components with no neighbour in another region stay put. Every move
    lowers the total component count, so the loop ends.
    """
    moves = 0
    moved = True
    while moved:
        moved = False
        for rank in range(k):
            cells = np.flatnonzero(owner == rank)
            count, labels = connected_components(dual[cells][:, cells], directed=False)
            if count == 1:
                continue
            main = int(np.argmax(np.bincount(labels)))
            for label in range(count):
                if label == main:
                    continue
                members = cells[labels == label]
                adjacent = np.unique(owner[dual[members].indices])
                adjacent = adjacent[adjacent != rank]
                if not adjacent.size:
                    continue
                sizes = np.bincount(owner, minlength=k)
                target = int(adjacent[np.argmin(sizes[adjacent])])
                owner[members] = target
                moves += 1
                moved = True
    return moves


def partition(mesh: MeshGeometry, k: int) -> PartitionMap:
    """Split the cells of ``mesh`` into ``k`` connected, balanced regions.

    Seeds are spread by repeated farthest-cell selection on the facet-dual
    graph, starting from cell 0. Rank ``r`` then grows from its seed over
    unassigned cells up to ``ceil(remaining / (k - r))`` cells, where
    ``remaining`` counts the cells still unassigned. The frontier is expanded
    breadth-first with every frontier cell tied, so the lowest cell id goes
    first. A rank whose seed is taken, or whose growth stalls, continues from
    the lowest unassigned cell; the last rank takes whatever remains. Before
    repair, sizes are therefore ``floor(cells / k)`` or ``ceil(cells / k)``.

    Finally every disconnected piece of a region is handed to an adjacent
    region (see ``_reconnect``), so each region is connected whenever the
    facet-dual graph is. Repair can move sizes off the balanced target.
    """
    num_cells = mesh.num_cells
    if isinstance(k, bool) or not isinstance(k, int | np.integer) or not 1 <= k <= num_cells:
        raise ArgumentError(
            f"Number of parts must lie in [1, {num_cells}]",
            details={"parts": k, "cells": num_cells},
        )
    graph = facet_dual_graph(mesh.plex)
    owner = np.full(num_cells, -1, dtype=np.int64)
    seeds = _spread_seeds(graph, k)

    for rank in range(k - 1):
        remaining = int(np.count_nonzero(owner < 0))
        target = math.ceil(remaining / (k - rank))
        seed = seeds[rank]
        count = 0
        while count < target:
            if owner[seed] >= 0:
                seed = int(np.flatnonzero(owner < 0)[0])
            count += _grow(graph, owner, seed, rank, target - count)
    owner[owner < 0] = k - 1

    moves = _reconnect(_dual_matrix(graph), owner, k)
    part = PartitionMap(cell_owner=owner, num_ranks=k)
    logger.info(
        f"Partitioned {num_cells} cells into {k} parts",
        extra={"parts": k, "sizes": part.rank_sizes().tolist(), "reconnected": moves},
    )
    return part
