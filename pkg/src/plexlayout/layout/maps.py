"""Cell-to-DoF and facet-to-cell indirection maps."""

import logging
from dataclasses import dataclass

import numpy as np

from plexlayout.core.exceptions import IntegrityError, TopologyError
from plexlayout.layout.closure import local_facet_number, ordered_cell_closure
from plexlayout.layout.dofs import DofLayout
from plexlayout.layout.section import Section
from plexlayout.parallel.distribute import LocalMesh

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CellMap:
    """DoF indices of every cell, one row per cell in permuted cell order."""

    values: np.ndarray
    cells: np.ndarray

    @property
    def arity(self) -> int:
        return int(self.values.shape[1])

    @property
    def num_cells(self) -> int:
        return int(self.values.shape[0])

    def row_of(self, cell: int) -> np.ndarray:
        rows = np.flatnonzero(self.cells == cell)
        if not rows.size:
            raise IntegrityError(f"Cell {cell} is not in the map", details={"cell": cell})
        return self.values[rows[0]]

    def to_csv(self) -> str:
        return "".join(",".join(map(str, row)) + "\n" for row in self.values.tolist())


@dataclass(frozen=True, eq=False)
class FacetMaps:
    """Facet-to-cell maps.

    ``interior[i]`` holds ``[[cell+, local+], [cell-, local-]]`` for facet
    ``interior_facets[i]``; ``exterior[i]`` holds ``[cell, local]``.
    """

    interior_facets: np.ndarray
    interior: np.ndarray
    exterior_facets: np.ndarray
    exterior: np.ndarray


def _permuted_cells(local: LocalMesh, section: Section) -> np.ndarray:
    cells = np.asarray(local.plex.cells(), dtype=np.int64)
    return cells[np.argsort(section.ordering.new_of_old[cells], kind="stable")]


def _check_section(local: LocalMesh, section: Section, layout: DofLayout | None = None) -> None:
    plex = local.plex
    if section.chart_size != plex.chart_size:
        raise IntegrityError(
            f"Section covers {section.chart_size} points, plex has {plex.chart_size}",
            details={"section": section.chart_size, "chart_size": plex.chart_size},
        )
    layout = layout or section.layout
    expected = np.asarray(layout.dofs_per_depth, dtype=np.int64)[plex.depths]
    if layout.dim != plex.max_depth or not np.array_equal(expected, section.dof_counts):
        raise IntegrityError("Section DoF counts do not match the layout on this plex")


def cell_node_map(local: LocalMesh, section: Section, layout: DofLayout) -> CellMap:
    """Concatenate the section ranges of each cell's ordered closure."""
    _check_section(local, section, layout)
    plex = local.plex
    cells = _permuted_cells(local, section)
    rows = np.empty((cells.size, layout.dofs_per_cell), dtype=np.int64)
    for i, c in enumerate(cells.tolist()):
        row = [d for q in ordered_cell_closure(plex, c, section.ordering) for d in section.dofs(q)]
        if len(row) != layout.dofs_per_cell:
            raise IntegrityError(
                f"Cell {c} has {len(row)} DoFs, layout expects {layout.dofs_per_cell}",
                details={"cell": c},
            )
        rows[i] = row
    logger.debug("Built cell map", extra={"rank": local.rank, "cells": int(cells.size), "arity": rows.shape[1]})
    return CellMap(values=rows, cells=cells)


def facet_maps(local: LocalMesh, section: Section) -> FacetMaps:
    """Interior and exterior facet maps; the '+' side is the first support cell.

    Raises:
        TopologyError: a facet is shared by more than two cells.
    """
    _check_section(local, section)
    plex = local.plex
    perm = section.ordering
    facets = np.asarray(plex.height_stratum(1), dtype=np.int64)
    facets = facets[np.argsort(perm.new_of_old[facets], kind="stable")]
    interior_facets, interior, exterior_facets, exterior = [], [], [], []
    for f in facets.tolist():
        support = plex.support(f)
        if len(support) not in (1, 2):
            raise TopologyError(
                f"Facet {f} has {len(support)} cells in its support",
                details={"facet": f, "support": list(support)},
            )
        sides = [[c, local_facet_number(plex, c, f, perm)] for c in support]
        if len(sides) == 2:
            interior_facets.append(f)
            interior.append(sides)
        else:
            exterior_facets.append(f)
            exterior.append(sides[0])
    return FacetMaps(
        interior_facets=np.array(interior_facets, dtype=np.int64),
        interior=np.array(interior, dtype=np.int64).reshape(-1, 2, 2),
        exterior_facets=np.array(exterior_facets, dtype=np.int64),
        exterior=np.array(exterior, dtype=np.int64).reshape(-1, 2),
    )
