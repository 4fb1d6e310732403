"""Mesh construction from generators and Gmsh files."""

from plexlayout.mesh.generators import (
    InterpolatedTopology,
    interpolate_simplices,
    reference_tet,
    unit_square_mesh,
)
from plexlayout.mesh.geometry import BOUNDARY_LABEL, CELL_LABEL, MeshGeometry
from plexlayout.mesh.gmsh import read_gmsh

__all__ = [
    "BOUNDARY_LABEL",
    "CELL_LABEL",
    "InterpolatedTopology",
    "MeshGeometry",
    "interpolate_simplices",
    "read_gmsh",
    "reference_tet",
    "unit_square_mesh",
]
