"""Core / non-core / halo entity classes of a local mesh."""

import logging
from enum import IntEnum

from plexlayout.core.exceptions import IntegrityError, PreconditionError
from plexlayout.parallel.distribute import ENTITY_CLASS_LABEL, LocalMesh, PointSF
from plexlayout.topology import Label

logger = logging.getLogger(__name__)


class EntityClass(IntEnum):
    CORE = 0
    NON_CORE = 1
    HALO = 2

    @property
    def key(self) -> str:
        return self.name.lower().replace("_", "-")


def mark_entity_classes(local: LocalMesh, sf: PointSF) -> Label:
    """Label every local point core, non-core or halo.

    SF leaves are halo. Owned cells sharing a vertex with a halo cell are
    non-core, all other owned cells core. Owned lower-dimensional points are
    non-core when any owned cell in their star is, otherwise core.

    Raises:
        PreconditionError: a multi-rank mesh was distributed without overlap.
        IntegrityError: the SF leaves disagree with the ownership mask.
    """
    plex = local.plex
    halo_cells = local.ghost_cells()
    if local.num_ranks > 1 and not halo_cells:
        raise PreconditionError(
            f"Rank {local.rank} has no halo cells; distribute with overlap=1",
            details={"rank": local.rank},
        )
    leaf_points = set(sf.leaf_points())
    non_owned = {p for p in range(plex.chart_size) if not local.owned[p]}
    if leaf_points != non_owned:
        raise IntegrityError(
            f"Point SF of rank {local.rank} does not match its non-owned points",
            details={"rank": local.rank, "leaves": len(leaf_points), "non_owned": len(non_owned)},
        )

    label = plex.create_label(ENTITY_CLASS_LABEL)
    for p in sorted(leaf_points):
        label.set_value(EntityClass.HALO, p)

    for h in halo_cells:
        for v in plex.closure_of_depth(h, 0):
            for c in plex.star(v):
                if local.owned[c] and plex.is_cell(c):
                    label.set_value(EntityClass.NON_CORE, c)

    for c in local.owned_cells():
        if label.value(c) is None:
            label.set_value(EntityClass.CORE, c)

    for p in range(plex.chart_size):
        if label.value(p) is not None:
            continue
        star_cells = [c for c in plex.star(p) if local.owned[c] and plex.is_cell(c)]
        restricted = any(label.has(EntityClass.NON_CORE, c) for c in star_cells)
        label.set_value(EntityClass.NON_CORE if restricted else EntityClass.CORE, p)

    logger.debug(
        "Marked entity classes",
        extra={"rank": local.rank, **{cls.key: label.stratum_size(cls) for cls in EntityClass}},
    )
    return label


def class_counts(local: LocalMesh) -> dict[str, dict[str, int]]:
    """Per-class point and cell counts of a marked local mesh."""
    label = local.classes
    if label is None:
        raise PreconditionError(f"Rank {local.rank} has no entity classes", details={"rank": local.rank})
    cells = set(local.plex.cells())
    counts = {}
    for cls in EntityClass:
        stratum = label.stratum(cls)
        counts[cls.key] = {
            "points": len(stratum),
            "cells": sum(1 for p in stratum if p in cells),
        }
    return counts
