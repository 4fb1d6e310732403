"""Partitioning, simulated distribution, entity classes and halo exchange."""

from plexlayout.parallel.classes import EntityClass, class_counts, mark_entity_classes
from plexlayout.parallel.distribute import (
    ENTITY_CLASS_LABEL,
    LocalMesh,
    PointSF,
    SFLeaf,
    distribute,
)
from plexlayout.parallel.halo import (
    DataSF,
    ReduceOp,
    SFEdge,
    derive_data_sf,
    sf_broadcast,
    sf_reduce,
)
from plexlayout.parallel.partition import PartitionMap, facet_dual_graph, partition

__all__ = [
    "DataSF",
    "ENTITY_CLASS_LABEL",
    "EntityClass",
    "LocalMesh",
    "PartitionMap",
    "PointSF",
    "ReduceOp",
    "SFEdge",
    "SFLeaf",
    "class_counts",
    "derive_data_sf",
    "distribute",
    "facet_dual_graph",
    "mark_entity_classes",
    "partition",
    "sf_broadcast",
    "sf_reduce",
]
