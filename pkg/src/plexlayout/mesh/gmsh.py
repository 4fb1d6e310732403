"""Reader for Gmsh MSH 2.2 ASCII files."""

import logging
from pathlib import Path
from typing import BinaryIO, NamedTuple

import numpy as np

from plexlayout.core.exceptions import (
    IntegrityError,
    MeshFormatError,
    UnsupportedElementError,
    UnsupportedVersionError,
)
from plexlayout.mesh.generators import interpolate_simplices
from plexlayout.mesh.geometry import BOUNDARY_LABEL, CELL_LABEL, MeshGeometry

logger = logging.getLogger(__name__)

SUPPORTED_VERSION = "2.2"

# Gmsh type code -> (topological dimension, node count)
ELEMENT_TYPES: dict[int, tuple[int, int]] = {
    1: (1, 2),   # 2-node line
    2: (2, 3),   # 3-node triangle
    4: (3, 4),   # 4-node tetrahedron
    15: (0, 1),  # 1-node point
}


class _Element(NamedTuple):
    element_id: int
    dim: int
    physical: int | None
    nodes: tuple[int, ...]


def _sections(text: str) -> dict[str, list[str]]:
    """Split the file into ``$Name ... $EndName`` bodies."""
    sections: dict[str, list[str]] = {}
    current: str | None = None
    body: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if current is None:
            if not line:
                continue
            if not line.startswith("$") or line.startswith("$End"):
                raise MeshFormatError(f"Unexpected content on line {lineno}", details={"line": lineno})
            current, body = line[1:], []
        elif line == f"$End{current}":
            sections.setdefault(current, body)
            current = None
        else:
            body.append(line)
    if current is not None:
        raise MeshFormatError(f"Section ${current} is not terminated", details={"section": current})
    return sections


def _counted(sections: dict[str, list[str]], name: str) -> list[list[str]]:
    if name not in sections:
        raise MeshFormatError(f"Missing ${name} section", details={"section": name})
    body = sections[name]
    try:
        count = int(body[0])
    except (IndexError, ValueError):
        raise MeshFormatError(f"${name} section has no entry count", details={"section": name}) from None
    rows = [line.split() for line in body[1:] if line]
    if len(rows) != count:
        raise MeshFormatError(
            f"${name} declares {count} entries but holds {len(rows)}",
            details={"section": name, "declared": count, "found": len(rows)},
        )
    return rows


def _check_header(sections: dict[str, list[str]]) -> None:
    if "MeshFormat" not in sections or not sections["MeshFormat"]:
        raise MeshFormatError("Missing $MeshFormat header")
    fields = sections["MeshFormat"][0].split()
    if len(fields) != 3:
        raise MeshFormatError("Malformed $MeshFormat header", details={"header": sections["MeshFormat"][0]})
    version, file_type, _ = fields
    if version != SUPPORTED_VERSION:
        raise UnsupportedVersionError(version)
    if file_type != "0":
        raise MeshFormatError("Binary MSH files are not supported", details={"file_type": file_type})


def _parse_nodes(rows: list[list[str]]) -> dict[int, tuple[float, float, float]]:
    nodes: dict[int, tuple[float, float, float]] = {}
    for row in rows:
        try:
            node_id = int(row[0])
            x, y, z = (float(v) for v in row[1:4])
        except (IndexError, ValueError):
            raise MeshFormatError(f"Malformed node entry: {' '.join(row)}") from None
        if len(row) != 4:
            raise MeshFormatError(f"Malformed node entry: {' '.join(row)}")
        nodes[node_id] = (x, y, z)
    return nodes


def _parse_elements(rows: list[list[str]]) -> list[_Element]:
    elements = []
    for row in rows:
        try:
            fields = [int(v) for v in row]
            element_id, type_code, num_tags = fields[:3]
        except ValueError:
            raise MeshFormatError(f"Malformed element entry: {' '.join(row)}") from None
        if type_code not in ELEMENT_TYPES:
            raise UnsupportedElementError(type_code)
        dim, num_nodes = ELEMENT_TYPES[type_code]
        if len(fields) != 3 + num_tags + num_nodes:
            raise MeshFormatError(
                f"Element {element_id} has {len(fields) - 3 - num_tags} nodes, expected {num_nodes}",
                details={"element": element_id, "type": type_code},
            )
        tags = fields[3 : 3 + num_tags]
        physical = tags[0] if tags else None
        elements.append(_Element(element_id, dim, physical, tuple(fields[3 + num_tags :])))
    return elements


def read_gmsh(source: BinaryIO | bytes | str | Path) -> MeshGeometry:
    """Read a Gmsh MSH 2.2 ASCII mesh of triangles or tetrahedra.

    Elements of the highest dimension become cells; only their nodes become
    vertices, numbered in ascending Gmsh node id. Physical tags of elements one
    dimension lower are stored on the matching facets in ``"Face Sets"``, and
    cell tags in ``"Cell Sets"``. ``$PhysicalNames`` and unknown sections are
    ignored.

    Raises:
        UnsupportedVersionError: header version is not 2.2.
        UnsupportedElementError: an element type other than point, line,
            triangle or tetrahedron.
        MeshFormatError: malformed or binary content.
        IntegrityError: an element references an undefined node, or a tagged
            boundary element is not a facet of any cell.
    """
    if isinstance(source, str | Path):
        try:
            raw = Path(source).read_bytes()
        except OSError as exc:
            raise MeshFormatError(f"Cannot read mesh file {source}: {exc}", details={"path": str(source)}) from exc
    elif isinstance(source, bytes):
        raw = source
    else:
        raw = source.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError:
        raise MeshFormatError("MSH content is not ASCII text") from None

    sections = _sections(text)
    _check_header(sections)
    nodes = _parse_nodes(_counted(sections, "Nodes"))
    elements = _parse_elements(_counted(sections, "Elements"))

    for element in elements:
        missing = [n for n in element.nodes if n not in nodes]
        if missing:
            raise IntegrityError(
                f"Element {element.element_id} references undefined node {missing[0]}",
                details={"element": element.element_id, "node": missing[0]},
            )

    cell_dim = max((e.dim for e in elements), default=0)
    if cell_dim < 2:
        raise MeshFormatError("Mesh contains no triangles or tetrahedra")
    cell_elements = [e for e in elements if e.dim == cell_dim]
    facet_elements = [e for e in elements if e.dim == cell_dim - 1 and e.physical is not None]

    node_ids = sorted({n for e in cell_elements for n in e.nodes})
    index_of = {node_id: i for i, node_id in enumerate(node_ids)}
    cells = np.array([[index_of[n] for n in e.nodes] for e in cell_elements], dtype=np.int64)
    topology = interpolate_simplices(cells, len(node_ids))
    plex = topology.plex

    boundary = plex.create_label(BOUNDARY_LABEL)
    for element in facet_elements:
        try:
            key = tuple(sorted(index_of[n] for n in element.nodes))
            facet = topology.facet_of[key]
        except KeyError:
            raise IntegrityError(
                f"Boundary element {element.element_id} is not a facet of any cell",
                details={"element": element.element_id},
            ) from None
        boundary.set_value(element.physical, facet)

    cell_sets = plex.create_label(CELL_LABEL)
    for c, element in enumerate(cell_elements):
        if element.physical is not None:
            cell_sets.set_value(element.physical, c)

    coordinates = np.array([nodes[n][:cell_dim] for n in node_ids], dtype=np.float64)
    logger.info(
        "Read Gmsh mesh",
        extra={"cells": len(cell_elements), "vertices": len(node_ids), "dimension": cell_dim},
    )
    return MeshGeometry(plex=plex, coordinates=coordinates, cell_dimension=cell_dim, boundary_labels=boundary)
