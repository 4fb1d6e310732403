"""Global DoF numbering across simulated ranks."""

import logging
from collections.abc import Sequence

import numpy as np

from plexlayout.core.exceptions import IntegrityError, LayoutError
from plexlayout.layout.section import Section
from plexlayout.parallel.distribute import LocalMesh, PointSF
from plexlayout.parallel.halo import derive_data_sf, sf_broadcast

logger = logging.getLogger(__name__)

RankData = tuple[LocalMesh, PointSF, Section]


def owned_dof_mask(local: LocalMesh, section: Section) -> np.ndarray:
    """Boolean mask over the section's DoFs marking those of owned points."""
    mask = np.zeros(section.total_size, dtype=bool)
    mask[section.point_dof_indices()] = np.repeat(local.owned, section.dof_counts)
    return mask


def owned_dof_counts(ranks: Sequence[RankData]) -> list[int]:
    return [int(owned_dof_mask(local, section).sum()) for local, _, section in ranks]


def global_numbering(ranks: Sequence[RankData]) -> list[np.ndarray]:
    """Map every rank's local DoFs to global DoF ids.

    Owned DoFs are numbered rank-major in ascending local DoF order, starting
    at the exclusive scan of owned counts. Ghost DoFs receive their owner's
    id through one broadcast over the derived data SF.

    Raises:
        LayoutError: ranks use different DoF layouts.
        IntegrityError: a leaf points at a DoF its root rank does not own.
    """
    layouts = {section.layout for _, _, section in ranks}
    if len(layouts) > 1:
        raise LayoutError("Ranks use different DoF layouts", details={"layouts": len(layouts)})

    masks = [owned_dof_mask(local, section) for local, _, section in ranks]
    counts = [int(m.sum()) for m in masks]
    starts = np.cumsum([0, *counts])[:-1]
    numbering = []
    for mask, start in zip(masks, starts, strict=True):
        values = np.full(mask.size, -1, dtype=np.int64)
        values[mask] = start + np.arange(int(mask.sum()))
        numbering.append(values)

    sf = derive_data_sf([sf for _, sf, _ in ranks], [section for _, _, section in ranks])
    for edge in sf.edges:
        if numbering[edge.root_rank][edge.root_index] < 0:
            raise IntegrityError(
                f"Rank {edge.leaf_rank} expects rank {edge.root_rank} to own DoF {edge.root_index}",
                details={"leaf_rank": edge.leaf_rank, "root_rank": edge.root_rank, "root_index": edge.root_index},
            )
    numbering = sf_broadcast(sf, numbering)
    for rank, values in enumerate(numbering):
        if (values < 0).any():
            slot = int(np.flatnonzero(values < 0)[0])
            raise IntegrityError(
                f"DoF {slot} on rank {rank} has neither an owner nor a root",
                details={"rank": rank, "dof": slot},
            )
    logger.debug("Numbered DoFs globally", extra={"ranks": len(ranks), "global_size": int(sum(counts))})
    return numbering
