"""Stratified DAG storage of mesh topology.

Every mesh entity (vertex, edge, facet, cell) is a *point* in one consecutive
numbering ``[0, chart_size)``. The covering relation is stored as ordered cone
lists; supports are derived as their exact dual. Points are grouped into
depth strata, where depth is the longest path down to a point with an empty
cone.
"""

import logging
from collections import deque
from collections.abc import Sequence
from typing import NamedTuple

import numpy as np

from plexlayout.core.exceptions import (
    ArgumentError,
    LayoutError,
    NonConsecutiveStratumError,
    PointRangeError,
    TopologyError,
)
from plexlayout.topology.label import Label

logger = logging.getLogger(__name__)

Cone = tuple[int, ...]


class Stratum(NamedTuple):
    """Half-open range ``[start, end)`` holding every point of one depth."""

    depth: int
    start: int
    end: int


class Plex:
    """Immutable DAG of mesh points with mutable label attachments.

    Use :func:`build_from_cones` to construct one. Traversals that return sets
    (closure, star, adjacency) return ascending point lists; cone and support
    keep their construction order.
    """

    def __init__(
        self,
        cones: Sequence[Cone],
        supports: Sequence[Cone],
        depth: np.ndarray,
        labels: dict[str, Label] | None = None,
    ) -> None:
        self._cones: tuple[Cone, ...] = tuple(cones)
        self._supports: tuple[Cone, ...] = tuple(supports)
        self._depth = np.asarray(depth, dtype=np.int64)
        self._depth.flags.writeable = False
        self._max_depth = int(self._depth.max()) if self._depth.size else 0
        self._labels: dict[str, Label] = dict(labels or {})
        # inclusive closures, filled on first request
        self._closures: dict[int, tuple[int, ...]] = {}

        self._stratum_points: dict[int, Sequence[int]] = {}
        self._stratified = True
        for d in range(self._max_depth + 1):
            points = np.flatnonzero(self._depth == d)
            if points.size and points[-1] - points[0] + 1 == points.size:
                self._stratum_points[d] = range(int(points[0]), int(points[-1]) + 1)
            else:
                self._stratum_points[d] = tuple(points.tolist())
                self._stratified = self._stratified and points.size == 0

    # Sizes and strata

    @property
    def chart_size(self) -> int:
        return len(self._cones)

    @property
    def max_depth(self) -> int:
        return self._max_depth

    @property
    def is_stratified(self) -> bool:
        """Whether every depth stratum occupies a consecutive id range."""
        return self._stratified

    @property
    def depths(self) -> np.ndarray:
        """Read-only per-point depth array."""
        return self._depth

    @property
    def strata(self) -> list[Stratum]:
        """Depth strata ordered by their position in the chart."""
        if not self._stratified:
            raise LayoutError("Renumbered plex has no consecutive strata")
        ranges = [
            Stratum(d, pts.start, pts.stop)
            for d, pts in self._stratum_points.items()
            if isinstance(pts, range) and len(pts)
        ]
        return sorted(ranges, key=lambda s: s.start)

    def depth(self, p: int) -> int:
        return int(self._depth[self._check_point(p)])

    def height(self, p: int) -> int:
        return self._max_depth - self.depth(p)

    def depth_stratum(self, d: int) -> Sequence[int]:
        """Points of depth ``d``: a ``range`` on stratified plexes, else an ascending tuple."""
        if not 0 <= d <= self._max_depth:
            raise PointRangeError(
                f"Depth {d} outside [0, {self._max_depth}]",
                details={"depth": d, "max_depth": self._max_depth},
            )
        return self._stratum_points[d]

    def height_stratum(self, h: int) -> Sequence[int]:
        if not 0 <= h <= self._max_depth:
            raise PointRangeError(
                f"Height {h} outside [0, {self._max_depth}]",
                details={"height": h, "max_depth": self._max_depth},
            )
        return self._stratum_points[self._max_depth - h]

    def cells(self) -> Sequence[int]:
        return self.height_stratum(0)

    def vertices(self) -> Sequence[int]:
        return self.depth_stratum(0)

    def is_cell(self, p: int) -> bool:
        return self.depth(p) == self._max_depth

    # Adjacency queries

    def _check_point(self, p: int) -> int:
        p = int(p)
        if not 0 <= p < len(self._cones):
            raise PointRangeError(
                f"Point {p} outside chart [0, {len(self._cones)})",
                details={"point": p, "chart_size": len(self._cones)},
            )
        return p

    def cone(self, p: int) -> Cone:
        return self._cones[self._check_point(p)]

    def support(self, p: int) -> Cone:
        return self._supports[self._check_point(p)]

    def cones(self) -> list[Cone]:
        """All cones in construction order."""
        return list(self._cones)

    def _transitive(self, p: int, relation: Sequence[Cone], include_self: bool) -> list[int]:
        p = self._check_point(p)
        seen: set[int] = set()
        frontier = [p]
        while frontier:
            following = []
            for q in frontier:
                for r in relation[q]:
                    if r not in seen:
                        seen.add(r)
                        following.append(r)
            frontier = following
        if include_self:
            seen.add(p)
        return sorted(seen)

    def closure(self, p: int, include_self: bool = False) -> list[int]:
        """Transitive closure of the cone relation, ascending.

        The seed point is excluded unless ``include_self`` is set. Results are
        memoised per point; cones never change after construction.
        """
        p = self._check_point(p)
        full = self._closures.get(p)
        if full is None:
            full = self._closures[p] = tuple(self._transitive(p, self._cones, True))
        return list(full) if include_self else [q for q in full if q != p]

    def star(self, p: int, include_self: bool = False) -> list[int]:
        """Transitive closure of the support relation, ascending."""
        return self._transitive(p, self._supports, include_self)

    def adjacency(self, p: int) -> list[int]:
        """Points sharing a closure with ``p``: closure(star(p)), without ``p``."""
        p = self._check_point(p)
        reached: set[int] = set()
        for q in self.star(p, include_self=True):
            reached.update(self.closure(q, include_self=True))
        reached.discard(p)
        return sorted(reached)

    def closure_of_depth(self, p: int, d: int) -> list[int]:
        """Points of depth ``d`` in the inclusive closure of ``p``, ascending."""
        return [q for q in self.closure(p, include_self=True) if self._depth[q] == d]

    # Labels

    def create_label(self, name: str) -> Label:
        """Create (or reset) the label ``name``."""
        label = Label(name, self.chart_size)
        self._labels[name] = label
        return label

    def get_label(self, name: str) -> Label:
        try:
            return self._labels[name]
        except KeyError:
            raise ArgumentError(f"Plex has no label '{name}'", details={"label": name}) from None

    def has_label(self, name: str) -> bool:
        return name in self._labels

    @property
    def label_names(self) -> list[str]:
        return sorted(self._labels)

    def label_set(self, name: str, value: int, p: int) -> None:
        """Set the value of ``p`` in label ``name``, creating the label on first use."""
        if name not in self._labels:
            self.create_label(name)
        self._labels[name].set_value(value, p)

    def label_stratum(self, name: str, value: int) -> list[int]:
        return self.get_label(name).stratum(value)

    def label_has(self, name: str, value: int, p: int) -> bool:
        return self.get_label(name).has(value, p)

    # Renumbering

    def renamed(self, new_of_old: Sequence[int]) -> "Plex":
        """Copy of the plex with every point ``p`` renamed to ``new_of_old[p]``.

        Cone and support order is preserved; strata of the copy are generally
        not consecutive.
        """
        mapping = [int(q) for q in new_of_old]
        n = self.chart_size
        cones: list[Cone] = [()] * n
        supports: list[Cone] = [()] * n
        depth = np.empty(n, dtype=np.int64)
        for old in range(n):
            new = mapping[old]
            cones[new] = tuple(mapping[q] for q in self._cones[old])
            supports[new] = tuple(mapping[q] for q in self._supports[old])
            depth[new] = self._depth[old]
        labels = {name: label.renamed(mapping) for name, label in self._labels.items()}
        return Plex(cones, supports, depth, labels)

    # Validation

    def validate(self) -> None:
        """Check duality, acyclicity and cone depths exhaustively."""
        for p, cone in enumerate(self._cones):
            for q in cone:
                if p not in self._supports[q]:
                    raise TopologyError(
                        f"Point {q} is in cone({p}) but {p} is not in support({q})",
                        details={"point": p, "covered": q},
                    )
        for q, support in enumerate(self._supports):
            for p in support:
                if q not in self._cones[p]:
                    raise TopologyError(
                        f"Point {p} is in support({q}) but {q} is not in cone({p})",
                        details={"point": q, "covering": p},
                    )
        _compute_depth(self._cones, self._supports)
        _check_cone_depths(self._cones, self._depth)

    def __repr__(self) -> str:
        sizes = {d: len(pts) for d, pts in self._stratum_points.items()}
        return f"Plex(chart_size={self.chart_size}, strata={sizes})"


def _dual(cones: Sequence[Cone], chart_size: int) -> list[Cone]:
    supports: list[list[int]] = [[] for _ in range(chart_size)]
    for p, cone in enumerate(cones):
        for q in cone:
            supports[q].append(p)
    return [tuple(s) for s in supports]


def _compute_depth(cones: Sequence[Cone], supports: Sequence[Cone]) -> np.ndarray:
    """Longest-path depth by a topological sweep upward from cone-minimal points."""
    n = len(cones)
    remaining = [len(c) for c in cones]
    depth = [0] * n
    queue = deque(p for p in range(n) if remaining[p] == 0)
    visited = 0
    while queue:
        q = queue.popleft()
        visited += 1
        for s in supports[q]:
            if depth[q] + 1 > depth[s]:
                depth[s] = depth[q] + 1
            remaining[s] -= 1
            if remaining[s] == 0:
                queue.append(s)
    if visited != n:
        cyclic = next(p for p in range(n) if remaining[p] > 0)
        raise TopologyError(
            f"Cone relation contains a cycle reachable from point {cyclic}",
            details={"point": cyclic},
        )
    return np.asarray(depth, dtype=np.int64)


def _check_cone_depths(cones: Sequence[Cone], depth: np.ndarray) -> None:
    for p, cone in enumerate(cones):
        d = depth[p]
        for q in cone:
            if depth[q] != d - 1:
                raise TopologyError(
                    f"cone({p}) mixes depths: point {q} has depth {int(depth[q])}, expected {int(d) - 1}",
                    details={"point": p, "covered": q},
                )


def _check_consecutive(depth: np.ndarray) -> None:
    for d in np.unique(depth):
        points = np.flatnonzero(depth == d)
        first, last = int(points[0]), int(points[-1])
        if last - first + 1 != points.size:
            gap = np.flatnonzero(depth[first : last + 1] != d)[0]
            raise NonConsecutiveStratumError(point=first + int(gap), depth=int(d))


def build_from_cones(chart_size: int, cones: Sequence[Sequence[int]]) -> Plex:
    """Build a plex from per-point cone lists.

    Supports are derived as the exact dual of the cones and depths by a
    topological sweep. The points of each depth must already be numbered
    consecutively.

    Raises:
        TopologyError: if the cone relation has a cycle, repeats a point or
            mixes depths within one cone.
        NonConsecutiveStratumError: if a stratum is interrupted by another.
        PointRangeError: if a cone references a point outside the chart.
    """
    if chart_size < 0 or len(cones) != chart_size:
        raise ArgumentError(
            f"Expected {chart_size} cone lists, got {len(cones)}",
            details={"chart_size": chart_size, "cones": len(cones)},
        )
    checked: list[Cone] = []
    for p, cone in enumerate(cones):
        entry = tuple(int(q) for q in cone)
        for q in entry:
            if not 0 <= q < chart_size:
                raise PointRangeError(
                    f"cone({p}) references point {q} outside chart [0, {chart_size})",
                    details={"point": p, "covered": q, "chart_size": chart_size},
                )
        if len(set(entry)) != len(entry):
            raise TopologyError(f"cone({p}) repeats a point", details={"point": p, "cone": entry})
        checked.append(entry)

    supports = _dual(checked, chart_size)
    depth = _compute_depth(checked, supports)
    _check_cone_depths(checked, depth)
    _check_consecutive(depth)

    plex = Plex(checked, supports, depth)
    logger.debug(
        "Built plex",
        extra={"chart_size": chart_size, "max_depth": plex.max_depth},
    )
    return plex


def euler_characteristic(plex: Plex) -> int:
    """Alternating sum of stratum sizes over depth."""
    return sum((-1) ** d * len(plex.depth_stratum(d)) for d in range(plex.max_depth + 1))

