"""Built-in mesh generators and simplex interpolation."""

import logging
from typing import NamedTuple

import numpy as np

from plexlayout.core.exceptions import ArgumentError, IntegrityError, TopologyError
from plexlayout.mesh.geometry import BOUNDARY_LABEL, MeshGeometry
from plexlayout.topology import Plex, build_from_cones

logger = logging.getLogger(__name__)

VertexKey = tuple[int, ...]


class InterpolatedTopology(NamedTuple):
    """Result of :func:`interpolate_simplices`."""

    plex: Plex
    facet_of: dict[VertexKey, int]
    """Facet point keyed by the sorted input vertex indices of the facet."""


def _register(entities: dict[VertexKey, tuple[int, VertexKey]], verts: VertexKey) -> int:
    key = tuple(sorted(verts))
    if key not in entities:
        entities[key] = (len(entities), verts)
    return entities[key][0]


def _without(items: VertexKey, i: int) -> VertexKey:
    return items[:i] + items[i + 1 :]


def interpolate_simplices(cells: np.ndarray, num_vertices: int) -> InterpolatedTopology:
    """Build an interpolated plex from triangle or tetrahedron vertex lists.

    Chart layout is cells, vertices, facets, then (in 3D) edges. Edges and
    facets are keyed by their sorted vertex set and numbered by first
    encounter over an ascending cell sweep; local entity ``i`` of a simplex is
    the one opposite its ``i``-th vertex. Input vertex ``v`` becomes point
    ``len(cells) + v``.
    """
    cells = np.asarray(cells, dtype=np.int64)
    if cells.ndim != 2 or cells.shape[1] not in (3, 4) or cells.shape[0] == 0:
        raise ArgumentError(
            "Expected a non-empty (n, 3) or (n, 4) array of cell vertices",
            details={"shape": list(cells.shape)},
        )
    if cells.min() < 0 or cells.max() >= num_vertices:
        raise IntegrityError(
            f"Cell references a vertex outside [0, {num_vertices})",
            details={"num_vertices": num_vertices},
        )
    dim = cells.shape[1] - 1
    num_cells = cells.shape[0]
    rows = [tuple(row) for row in cells.tolist()]
    for c, row in enumerate(rows):
        if len(set(row)) != dim + 1:
            raise TopologyError(f"Cell {c} repeats a vertex", details={"cell": c, "vertices": list(row)})

    vstart = num_cells
    facets: dict[VertexKey, tuple[int, VertexKey]] = {}
    edges: dict[VertexKey, tuple[int, VertexKey]] = {}
    cell_cones: list[list[int]] = []
    face_cones: dict[int, list[int]] = {}

    for row in rows:
        cone = []
        for i in range(dim + 1):
            facet_verts = _without(row, i)
            seen = len(facets)
            f = _register(facets, facet_verts)
            cone.append(f)
            if dim == 3 and f == seen:
                face_cones[f] = [_register(edges, _without(facet_verts, j)) for j in range(3)]
        cell_cones.append(cone)

    fstart = vstart + num_vertices
    cones: list[list[int]] = [[fstart + f for f in cone] for cone in cell_cones]
    cones.extend([] for _ in range(num_vertices))
    if dim == 2:
        cones.extend([vstart + v for v in verts] for _, verts in facets.values())
    else:
        estart = fstart + len(facets)
        cones.extend([estart + e for e in face_cones[f]] for f, _ in facets.values())
        cones.extend([vstart + v for v in verts] for _, verts in edges.values())

    plex = build_from_cones(len(cones), cones)
    facet_of = {key: fstart + index for key, (index, _) in facets.items()}
    logger.debug(
        "Interpolated simplices",
        extra={"cells": num_cells, "facets": len(facets), "edges": len(edges)},
    )
    return InterpolatedTopology(plex, facet_of)


def unit_square_mesh(nx: int, ny: int) -> MeshGeometry:
    """Structured triangulation of the unit square.

    Each of the ``nx * ny`` squares is split along its lower-left to
    upper-right diagonal into a lower and an upper triangle. Boundary edges
    are marked in the ``"Face Sets"`` label:

    * 1: plane x == 0
    * 2: plane x == 1
    * 3: plane y == 0
    * 4: plane y == 1
    """
    for n in (nx, ny):
        if isinstance(n, bool) or not isinstance(n, int | np.integer) or n < 1:
            raise ArgumentError("Number of cells must be a positive integer", details={"nx": nx, "ny": ny})

    i, j = np.meshgrid(np.arange(nx), np.arange(ny))
    v00 = (j * (nx + 1) + i).ravel()
    v10 = v00 + 1
    v01 = v00 + nx + 1
    v11 = v01 + 1
    lower = np.stack([v00, v10, v11], axis=1)
    upper = np.stack([v00, v11, v01], axis=1)
    cells = np.stack([lower, upper], axis=1).reshape(-1, 3)

    num_vertices = (nx + 1) * (ny + 1)
    topology = interpolate_simplices(cells, num_vertices)
    plex = topology.plex

    xs = np.linspace(0.0, 1.0, nx + 1)
    ys = np.linspace(0.0, 1.0, ny + 1)
    coordinates = np.asarray(np.meshgrid(xs, ys)).reshape(2, -1).T

    boundary = plex.create_label(BOUNDARY_LABEL)
    for (a, b), facet in topology.facet_of.items():
        (ia, ja), (ib, jb) = divmod(a, nx + 1)[::-1], divmod(b, nx + 1)[::-1]
        if ia == ib == 0:
            boundary.set_value(1, facet)
        elif ia == ib == nx:
            boundary.set_value(2, facet)
        elif ja == jb == 0:
            boundary.set_value(3, facet)
        elif ja == jb == ny:
            boundary.set_value(4, facet)

    logger.info(
        f"Generated {nx}x{ny} unit square mesh",
        extra={"cells": len(cells), "vertices": num_vertices},
    )
    return MeshGeometry(plex=plex, coordinates=coordinates, cell_dimension=2, boundary_labels=boundary)


# Cell 0, vertices 1-4, facets 5-8, edges 9-14.
_REFERENCE_TET_CONES: list[list[int]] = [
    [5, 6, 7, 8],
    [], [], [], [],
    [9, 10, 11], [10, 12, 13], [11, 13, 14], [9, 12, 14],
    [2, 3], [1, 3], [1, 2], [3, 4], [1, 4], [2, 4],
]

_REFERENCE_TET_COORDINATES = np.array(
    [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
)


def reference_tet() -> MeshGeometry:
    """The single tetrahedron with the canonical 15-point numbering."""
    plex = build_from_cones(len(_REFERENCE_TET_CONES), _REFERENCE_TET_CONES)
    boundary = plex.create_label(BOUNDARY_LABEL)
    for facet in plex.height_stratum(1):
        boundary.set_value(1, facet)
    return MeshGeometry(
        plex=plex,
        coordinates=_REFERENCE_TET_COORDINATES.copy(),
        cell_dimension=3,
        boundary_labels=boundary,
    )
