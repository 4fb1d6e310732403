"""Per-entity DoF counts of Lagrange elements on simplices."""

from dataclasses import dataclass
from math import comb

from plexlayout.core.exceptions import ArgumentError

SUPPORTED_DIMENSIONS = (2, 3)
MAX_DEGREE = 3


@dataclass(frozen=True)
class DofLayout:
    """DoFs attached to each entity depth of a reference simplex."""

    dim: int
    degree: int
    dofs_per_depth: tuple[int, ...]

    @property
    def dofs_per_cell(self) -> int:
        """Total DoFs on one cell closure: a (dim)-simplex has comb(dim+1, d+1) entities of depth d."""
        return sum(comb(self.dim + 1, d + 1) * n for d, n in enumerate(self.dofs_per_depth))

    def count(self, depth: int) -> int:
        return self.dofs_per_depth[depth]


def lagrange_dof_layout(dim: int, degree: int) -> DofLayout:
    """Lagrange DoF distribution: vertex 1, edge p-1, triangle (p-1)(p-2)/2, tet (p-1)(p-2)(p-3)/6."""
    if dim not in SUPPORTED_DIMENSIONS:
        raise ArgumentError(f"Unsupported cell dimension {dim}", details={"dim": dim})
    if isinstance(degree, bool) or not isinstance(degree, int) or not 1 <= degree <= MAX_DEGREE:
        raise ArgumentError(f"Unsupported polynomial degree {degree}", details={"degree": degree})
    p = degree
    counts = (1, p - 1, (p - 1) * (p - 2) // 2, (p - 1) * (p - 2) * (p - 3) // 6)
    return DofLayout(dim=dim, degree=degree, dofs_per_depth=counts[: dim + 1])
