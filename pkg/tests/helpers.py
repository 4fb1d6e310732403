"""Shared helpers for building distributed test meshes."""

from collections.abc import Sequence

import numpy as np

from plexlayout.layout import DofLayout, Section, create_section
from plexlayout.mesh import MeshGeometry
from plexlayout.ordering import cell_ordering, compact_class_permutation
from plexlayout.parallel import LocalMesh, PartitionMap, PointSF, distribute, mark_entity_classes


def reachable(relation: Sequence[Sequence[int]], p: int) -> set[int]:
    """Brute-force reachability by depth-first search, excluding the seed."""
    seen: set[int] = set()
    stack = list(relation[p])
    while stack:
        q = stack.pop()
        if q not in seen:
            seen.add(q)
            stack.extend(relation[q])
    seen.discard(p)
    return seen


def distributed(mesh: MeshGeometry, part: PartitionMap, overlap: int = 1) -> list[tuple[LocalMesh, PointSF]]:
    """Distribute and mark entity classes on every rank."""
    ranks = distribute(mesh, part, overlap=overlap)
    for local, sf in ranks:
        mark_entity_classes(local, sf)
    return ranks


def single_rank(mesh: MeshGeometry) -> PartitionMap:
    return PartitionMap(cell_owner=np.zeros(mesh.num_cells, dtype=np.int64), num_ranks=1)


def quadrants(n: int) -> PartitionMap:
    """Four ranks on the quadrants of unit_square_mesh(n, n), n even."""
    owner = np.empty(2 * n * n, dtype=np.int64)
    for j in range(n):
        for i in range(n):
            rank = int(i >= n // 2) + 2 * int(j >= n // 2)
            owner[2 * (j * n + i) : 2 * (j * n + i) + 2] = rank
    return PartitionMap(cell_owner=owner, num_ranks=4)


def with_sections(
    ranks: list[tuple[LocalMesh, PointSF]], layout: DofLayout, ordering: str = "rcm"
) -> list[tuple[LocalMesh, PointSF, Section]]:
    """Attach a compact permutation and section to every rank."""
    out = []
    for local, sf in ranks:
        perm = compact_class_permutation(local, cell_ordering(ordering, local.plex, 0))
        out.append((local, sf, create_section(local, perm, layout)))
    return out
