"""Gather/scatter assembly loops over cells and interior facets."""

import logging
import time
from typing import NamedTuple

import numpy as np

from plexlayout.core.config import settings
from plexlayout.core.exceptions import ArgumentError
from plexlayout.layout.maps import CellMap, FacetMaps

logger = logging.getLogger(__name__)


class BenchResult(NamedTuple):
    result: np.ndarray
    seconds: float


def _assemble(rows: np.ndarray, data: np.ndarray, out: np.ndarray, weight: float) -> None:
    """Scatter-add each row's weighted sum of gathered values back to its DoFs."""
    contribution = weight * data[rows].sum(axis=1)
    np.add.at(out, rows, np.broadcast_to(contribution[:, None], rows.shape))


def _run(rows: np.ndarray, data: np.ndarray, repeats: int, weight: float | None) -> BenchResult:
    if isinstance(repeats, bool) or not isinstance(repeats, int) or repeats < 1:
        raise ArgumentError("Repeats must be a positive integer", details={"repeats": repeats})
    weight = settings.BENCH_CELL_WEIGHT if weight is None else weight
    data = np.asarray(data)
    dtype = np.result_type(data.dtype, type(weight))
    _assemble(rows, data, np.zeros(data.shape[0], dtype=dtype), weight)
    result = np.zeros(data.shape[0], dtype=dtype)
    start = time.perf_counter()
    for _ in range(repeats):
        _assemble(rows, data, result, weight)
    return BenchResult(result, time.perf_counter() - start)


def bench_cell_loop(cellmap: CellMap, data: np.ndarray, repeats: int, weight: float | None = None) -> BenchResult:
    """Time ``repeats`` cell loops after one discarded warm-up repetition.

    Each repetition visits cells in map order, gathers their DoF values and
    scatter-adds the weighted sum to every DoF of the cell. The returned array
    accumulates all timed repetitions.
    """
    bench = _run(cellmap.values, data, repeats, weight)
    logger.debug("Cell loop", extra={"cells": cellmap.num_cells, "repeats": repeats, "seconds": bench.seconds})
    return bench


def bench_facet_loop(
    facets: FacetMaps, cellmap: CellMap, data: np.ndarray, repeats: int, weight: float | None = None
) -> BenchResult:
    """As :func:`bench_cell_loop`, visiting the '+' cell of every interior facet.

    Raises:
        ArgumentError: the mesh has no interior facets.
    """
    if not facets.interior_facets.size:
        raise ArgumentError("Facet loop needs at least one interior facet")
    row_of_cell = np.full(int(cellmap.cells.max()) + 1, -1, dtype=np.int64)
    row_of_cell[cellmap.cells] = np.arange(cellmap.num_cells)
    rows = cellmap.values[row_of_cell[facets.interior[:, 0, 0]]]
    bench = _run(rows, data, repeats, weight)
    logger.debug(
        "Facet loop",
        extra={"facets": int(facets.interior_facets.size), "repeats": repeats, "seconds": bench.seconds},
    )
    return bench
