"""Local numbering of simplex cell closures.

Vertices are sorted by global number; facet ``i`` is the facet opposite
vertex ``i``. In 3D, edges are sorted by the pair of local vertices they do
not touch. The resulting closure runs vertices, edges, facets, cell.
"""

from collections.abc import Callable

from plexlayout.core.exceptions import TopologyError
from plexlayout.ordering.permutation import Permutation
from plexlayout.topology import Plex


def _global_number(perm: Permutation | None) -> Callable[[int], int]:
    if perm is None:
        return int
    return lambda p: int(perm.new_of_old[p])


def _sorted_vertices(plex: Plex, cell: int, perm: Permutation | None) -> tuple[list[int], list[int]]:
    closure = plex.closure(cell, include_self=True)
    dim = plex.depth(cell)
    vertices = [q for q in closure if plex.depth(q) == 0]
    if dim < 1 or len(vertices) != dim + 1 or len(closure) != 2 ** (dim + 1) - 1:
        raise TopologyError(
            f"Closure of cell {cell} is not a {dim}-simplex",
            details={"cell": cell, "closure_size": len(closure), "vertices": len(vertices)},
        )
    vertices.sort(key=_global_number(perm))
    return vertices, closure


def ordered_cell_closure(plex: Plex, cell: int, perm: Permutation | None = None) -> list[int]:
    """Inclusive closure of ``cell`` in simplex local numbering.

    ``perm`` supplies the global numbers used to sort vertices; without it the
    point ids themselves are used.

    Raises:
        TopologyError: the closure does not have simplex cardinality.
    """
    vertices, closure = _sorted_vertices(plex, cell, perm)
    dim = len(vertices) - 1
    local_of = {v: i for i, v in enumerate(vertices)}

    def untouched(q: int) -> tuple[int, ...]:
        touched = {local_of[v] for v in plex.closure_of_depth(q, 0)}
        return tuple(i for i in range(dim + 1) if i not in touched)

    ordered = list(vertices)
    for depth in range(1, dim):
        entities = [q for q in closure if plex.depth(q) == depth]
        ordered.extend(sorted(entities, key=untouched))
    ordered.append(cell)
    return ordered


def local_facet_number(plex: Plex, cell: int, facet: int, perm: Permutation | None = None) -> int:
    """Local index of ``facet`` in ``cell``: the local number of its opposite vertex."""
    vertices, _ = _sorted_vertices(plex, cell, perm)
    facet_vertices = set(plex.closure_of_depth(facet, 0))
    opposite = [i for i, v in enumerate(vertices) if v not in facet_vertices]
    if len(opposite) != 1 or facet not in plex.cone(cell):
        raise TopologyError(
            f"Point {facet} is not a facet of cell {cell}",
            details={"cell": cell, "facet": facet},
        )
    return opposite[0]
