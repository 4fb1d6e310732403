"""Sparsity patterns assembled from cell maps and their bandwidth metrics."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from plexlayout.core.exceptions import IntegrityError
from plexlayout.layout.maps import CellMap
from plexlayout.schemas.report import OrderingReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SparsityPattern:
    """Square CSR index structure with sorted, unique column indices per row."""

    matrix: sp.csr_matrix

    @property
    def n(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def row_starts(self) -> np.ndarray:
        return self.matrix.indptr

    @property
    def col_indices(self) -> np.ndarray:
        return self.matrix.indices

    @property
    def nnz(self) -> int:
        return int(self.matrix.nnz)

    def row(self, i: int) -> np.ndarray:
        return self.matrix.indices[self.matrix.indptr[i] : self.matrix.indptr[i + 1]]

    def row_ids(self) -> np.ndarray:
        """Row index of every stored nonzero."""
        return np.repeat(np.arange(self.n), np.diff(self.matrix.indptr))

    def entries(self) -> set[tuple[int, int]]:
        return set(zip(self.row_ids().tolist(), self.col_indices.tolist(), strict=True))

    def permuted(self, new_of_old: np.ndarray) -> "SparsityPattern":
        """Pattern with row and column ``i`` moved to ``new_of_old[i]``."""
        new_of_old = np.asarray(new_of_old, dtype=np.int64)
        return _from_pairs(new_of_old[self.row_ids()], new_of_old[self.col_indices], self.n)


def _from_pairs(rows: np.ndarray, cols: np.ndarray, n: int) -> SparsityPattern:
    matrix = sp.coo_matrix(
        (np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(n, n)
    ).tocsr()
    matrix.sum_duplicates()
    matrix.sort_indices()
    matrix.data[:] = 1
    return SparsityPattern(matrix)


def build_sparsity(
    cellmaps: Sequence[CellMap], global_num: Sequence[np.ndarray], n: int | None = None
) -> SparsityPattern:
    """Pattern holding every (row, col) pair of global DoFs sharing a cell.

    ``n`` defaults to one past the largest global DoF id.

    Raises:
        IntegrityError: a global index falls outside ``[0, n)``.
    """
    if len(cellmaps) != len(global_num):
        raise IntegrityError(
            f"Got {len(cellmaps)} cell maps but {len(global_num)} numberings",
            details={"cellmaps": len(cellmaps), "numberings": len(global_num)},
        )
    rows, cols = [], []
    for cellmap, numbering in zip(cellmaps, global_num, strict=True):
        numbering = np.asarray(numbering, dtype=np.int64)
        if cellmap.values.size and cellmap.values.max() >= numbering.size:
            raise IntegrityError("Cell map refers past the end of its numbering")
        dofs = numbering[cellmap.values]
        arity = cellmap.arity
        rows.append(np.repeat(dofs, arity, axis=1).ravel())
        cols.append(np.tile(dofs, (1, arity)).ravel())
    row_ids = np.concatenate(rows) if rows else np.empty(0, dtype=np.int64)
    col_ids = np.concatenate(cols) if cols else np.empty(0, dtype=np.int64)
    if n is None:
        n = int(row_ids.max()) + 1 if row_ids.size else 0
    if row_ids.size and (row_ids.min() < 0 or row_ids.max() >= n):
        bad = int(row_ids[(row_ids < 0) | (row_ids >= n)][0])
        raise IntegrityError(f"Global DoF {bad} outside [0, {n})", details={"dof": bad, "n": n})
    pattern = _from_pairs(row_ids, col_ids, n)
    logger.debug("Built sparsity pattern", extra={"n": n, "nnz": pattern.nnz})
    return pattern


def metrics(pattern: SparsityPattern) -> OrderingReport:
    """Bandwidth, profile and nonzero count of a pattern."""
    rows = pattern.row_ids()
    cols = pattern.col_indices
    bandwidth = int(np.abs(rows - cols).max()) if rows.size else 0
    starts = pattern.row_starts
    nonempty = np.flatnonzero(np.diff(starts))
    # columns are sorted, so a row's first entry is its leftmost column
    leftmost = cols[starts[nonempty]]
    profile = int(np.maximum(nonempty - leftmost, 0).sum())
    return OrderingReport(bandwidth=bandwidth, profile=profile, nnz=pattern.nnz)
