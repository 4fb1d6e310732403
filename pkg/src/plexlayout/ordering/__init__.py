"""Cell orderings and point permutations."""

from plexlayout.ordering.permutation import Permutation, apply_permutation, compact_class_permutation
from plexlayout.ordering.rcm import (
    CELL_ORDERINGS,
    cell_adjacency_graph,
    cell_ordering,
    cuthill_mckee_ordering,
    native_ordering,
    rcm_ordering,
    shuffled_ordering,
)

__all__ = [
    "CELL_ORDERINGS",
    "Permutation",
    "apply_permutation",
    "cell_adjacency_graph",
    "cell_ordering",
    "compact_class_permutation",
    "cuthill_mckee_ordering",
    "native_ordering",
    "rcm_ordering",
    "shuffled_ordering",
]
