"""Cell orderings: native, seeded shuffle and Reverse Cuthill-McKee."""

import logging
from collections import deque
from collections.abc import Callable

import numpy as np
import scipy.sparse as sp

from plexlayout.core.config import settings
from plexlayout.core.exceptions import ArgumentError
from plexlayout.topology import Plex

logger = logging.getLogger(__name__)


def cell_adjacency_graph(plex: Plex) -> sp.csr_matrix:
    """Symmetric CSR graph of cells sharing at least one vertex.

    Rows and columns are cell stratum positions; the diagonal is dropped and
    column indices are sorted.
    """
    cells = plex.cells()
    vertex_position = {v: i for i, v in enumerate(plex.vertices())}
    rows: list[int] = []
    cols: list[int] = []
    for i, c in enumerate(cells):
        for v in plex.closure_of_depth(c, 0):
            rows.append(i)
            cols.append(vertex_position[v])
    incidence = sp.csr_matrix(
        (np.ones(len(rows), dtype=np.int64), (rows, cols)),
        shape=(len(cells), len(vertex_position)),
    )
    graph = (incidence @ incidence.T).tocsr()
    graph = (graph - sp.diags(graph.diagonal())).tocsr()
    graph.eliminate_zeros()
    graph.sort_indices()
    return graph


def _bfs_distances(indptr: np.ndarray, indices: np.ndarray, start: int) -> np.ndarray:
    dist = np.full(indptr.size - 1, -1, dtype=np.int64)
    dist[start] = 0
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for n in indices[indptr[c] : indptr[c + 1]]:
            if dist[n] < 0:
                dist[n] = dist[c] + 1
                queue.append(n)
    return dist


def _pseudo_peripheral(indptr: np.ndarray, indices: np.ndarray, start: int, sweeps: int = 2) -> int:
    for _ in range(sweeps):
        # argmax picks the lowest id among the farthest cells
        start = int(np.argmax(_bfs_distances(indptr, indices, start)))
    return start


def cuthill_mckee_ordering(plex: Plex) -> list[int]:
    """Cuthill-McKee sequence of cell points.

    Components are visited in ascending order of their lowest cell. Each is
    entered at a pseudo-peripheral cell found by two BFS sweeps from its
    lowest cell; unvisited neighbours are queued by (degree, id).
    """
    cells = plex.cells()
    if not len(cells):
        raise ArgumentError("Cannot order a mesh without cells")
    graph = cell_adjacency_graph(plex)
    indptr, indices = graph.indptr, graph.indices
    degree = np.diff(indptr)
    visited = np.zeros(len(cells), dtype=bool)
    sequence: list[int] = []
    for lowest in range(len(cells)):
        if visited[lowest]:
            continue
        start = _pseudo_peripheral(indptr, indices, lowest)
        visited[start] = True
        queue = deque([start])
        while queue:
            c = queue.popleft()
            sequence.append(c)
            fresh = [int(n) for n in indices[indptr[c] : indptr[c + 1]] if not visited[n]]
            fresh.sort(key=lambda n: (degree[n], n))
            visited[fresh] = True
            queue.extend(fresh)
    return [cells[i] for i in sequence]


def rcm_ordering(plex: Plex) -> list[int]:
    """Reverse Cuthill-McKee ordering of all cells."""
    ordering = cuthill_mckee_ordering(plex)[::-1]
    logger.debug("Computed RCM ordering", extra={"cells": len(ordering)})
    return ordering


def native_ordering(plex: Plex) -> list[int]:
    return list(plex.cells())


def shuffled_ordering(plex: Plex, seed: int | None = None) -> list[int]:
    """Cells in a seeded random order, the unbanded baseline."""
    rng = np.random.default_rng(settings.SHUFFLE_SEED if seed is None else seed)
    return rng.permutation(np.asarray(plex.cells(), dtype=np.int64)).tolist()


CELL_ORDERINGS: dict[str, Callable[[Plex, int | None], list[int]]] = {
    "native": lambda plex, seed=None: native_ordering(plex),
    "rcm": lambda plex, seed=None: rcm_ordering(plex),
    "shuffle": shuffled_ordering,
}


def cell_ordering(name: str, plex: Plex, seed: int | None = None) -> list[int]:
    """Look up and run a registered cell ordering."""
    try:
        ordering = CELL_ORDERINGS[name]
    except KeyError:
        raise ArgumentError(
            f"Unknown cell ordering '{name}'",
            details={"ordering": name, "available": sorted(CELL_ORDERINGS)},
        ) from None
    return ordering(plex, seed)
