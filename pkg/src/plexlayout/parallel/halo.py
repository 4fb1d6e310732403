"""Star-forest halo exchange over simulated ranks.

A :class:`DataSF` pairs every ghost DoF slot (a leaf) with the owner's slot
(its root). Broadcast copies roots to leaves; reduce folds leaves into roots
in ascending (leaf rank, leaf index) order so sums are bit-reproducible.
"""

import csv
import io
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from plexlayout.core.exceptions import AmbiguityError, ArgumentError, IntegrityError, LayoutError
from plexlayout.parallel.distribute import PointSF

if TYPE_CHECKING:
    from plexlayout.layout.section import Section

logger = logging.getLogger(__name__)

CSV_HEADER = ("leaf_rank", "leaf_idx", "root_rank", "root_idx")


class SFEdge(NamedTuple):
    leaf_rank: int
    leaf_index: int
    root_rank: int
    root_index: int


class ReduceOp(str, Enum):
    SUM = "sum"
    MAX = "max"
    REPLACE = "replace"


@dataclass(frozen=True, eq=False)
class DataSF:
    """Leaf-to-root DoF edges across ``num_ranks`` ranks, sorted by leaf."""

    num_ranks: int
    edges: tuple[SFEdge, ...] = ()
    _groups: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = field(
        init=False, repr=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        edges = tuple(sorted(SFEdge(*map(int, e)) for e in self.edges))
        for a, b in zip(edges, edges[1:]):
            if (a.leaf_rank, a.leaf_index) == (b.leaf_rank, b.leaf_index):
                raise IntegrityError(
                    f"Leaf slot {a.leaf_index} on rank {a.leaf_rank} has two roots",
                    details={"leaf_rank": a.leaf_rank, "leaf_index": a.leaf_index},
                )
        for e in edges:
            if not (0 <= e.leaf_rank < self.num_ranks and 0 <= e.root_rank < self.num_ranks):
                raise IntegrityError(f"Edge {tuple(e)} names a rank outside [0, {self.num_ranks})")
        object.__setattr__(self, "edges", edges)
        grouped: dict[tuple[int, int], list[SFEdge]] = {}
        for e in edges:
            grouped.setdefault((e.leaf_rank, e.root_rank), []).append(e)
        for key, group in grouped.items():
            self._groups[key] = (
                np.array([e.leaf_index for e in group], dtype=np.int64),
                np.array([e.root_index for e in group], dtype=np.int64),
            )

    def __len__(self) -> int:
        return len(self.edges)

    def leaves_of(self, rank: int) -> np.ndarray:
        return np.array([e.leaf_index for e in self.edges if e.leaf_rank == rank], dtype=np.int64)

    def root_multiplicity(self, sizes: Sequence[int]) -> list[np.ndarray]:
        """Number of leaf edges targeting each root slot, per rank."""
        counts = [np.zeros(n, dtype=np.int64) for n in sizes]
        for (_, root_rank), (_, roots) in self._groups.items():
            np.add.at(counts[root_rank], roots, 1)
        return counts

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(self.edges)
        return buffer.getvalue()

    def _check(self, values: Sequence[np.ndarray]) -> list[np.ndarray]:
        if len(values) != self.num_ranks:
            raise ArgumentError(
                f"Expected {self.num_ranks} rank arrays, got {len(values)}",
                details={"ranks": self.num_ranks, "arrays": len(values)},
            )
        arrays = [np.asarray(v) for v in values]
        for (leaf_rank, root_rank), (leaves, roots) in self._groups.items():
            for rank, idx in ((leaf_rank, leaves), (root_rank, roots)):
                if idx.max() >= arrays[rank].shape[0]:
                    raise IntegrityError(
                        f"Index {int(idx.max())} out of bounds for rank {rank} array of size {arrays[rank].shape[0]}",
                        details={"rank": rank, "index": int(idx.max()), "size": int(arrays[rank].shape[0])},
                    )
        return arrays


def sf_broadcast(sf: DataSF, values: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Copy every root value into its leaf slots; inputs are not modified."""
    arrays = sf._check(values)
    out = [a.copy() for a in arrays]
    for (leaf_rank, root_rank), (leaves, roots) in sf._groups.items():
        out[leaf_rank][leaves] = arrays[root_rank][roots]
    return out


def sf_reduce(sf: DataSF, values: Sequence[np.ndarray], op: ReduceOp | str) -> list[np.ndarray]:
    """Fold leaf values into their roots with ``op``; leaf slots are unchanged."""
    try:
        op = ReduceOp(op)
    except ValueError:
        raise ArgumentError(f"Unknown reduction '{op}'", details={"op": str(op)}) from None
    arrays = sf._check(values)
    out = [a.copy() for a in arrays]

    if op is ReduceOp.REPLACE:
        targets = [(e.root_rank, e.root_index) for e in sf.edges]
        if len(set(targets)) != len(targets):
            raise AmbiguityError("Replace reduction with more than one leaf per root")

    # groups are keyed and iterated in ascending (leaf rank, root rank) order
    for (leaf_rank, root_rank), (leaves, roots) in sorted(sf._groups.items()):
        contribution = arrays[leaf_rank][leaves]
        if op is ReduceOp.SUM:
            np.add.at(out[root_rank], roots, contribution)
        elif op is ReduceOp.MAX:
            np.maximum.at(out[root_rank], roots, contribution)
        else:
            out[root_rank][roots] = contribution
    return out


def derive_data_sf(point_sfs: Sequence[PointSF], sections: Sequence["Section"]) -> DataSF:
    """Expand point-level leaves into DoF-level edges through each rank's section.

    Raises:
        LayoutError: a leaf point and its root carry different DoF counts.
    """
    if len(point_sfs) != len(sections):
        raise ArgumentError(
            f"Got {len(point_sfs)} point SFs but {len(sections)} sections",
            details={"point_sfs": len(point_sfs), "sections": len(sections)},
        )
    edges: list[SFEdge] = []
    for rank, point_sf in enumerate(point_sfs):
        section = sections[rank]
        for leaf in point_sf.leaves:
            count = section.dof_count(leaf.point)
            root_section = sections[leaf.owner_rank]
            root_count = root_section.dof_count(leaf.owner_point)
            if count != root_count:
                raise LayoutError(
                    f"Leaf point {leaf.point} on rank {rank} has {count} DoFs, "
                    f"root {leaf.owner_point} on rank {leaf.owner_rank} has {root_count}",
                    details={"rank": rank, "point": leaf.point, "owner_rank": leaf.owner_rank},
                )
            leaf_offset = section.offset(leaf.point)
            root_offset = root_section.offset(leaf.owner_point)
            edges.extend(
                SFEdge(rank, leaf_offset + k, leaf.owner_rank, root_offset + k) for k in range(count)
            )
    sf = DataSF(num_ranks=len(point_sfs), edges=tuple(edges))
    logger.debug("Derived data SF", extra={"edges": len(sf), "ranks": sf.num_ranks})
    return sf
