"""Unit tests for mesh generators and the Gmsh reader."""

import io

import numpy as np
import pytest

from plexlayout.core.exceptions import (
    ArgumentError,
    IntegrityError,
    MeshFormatError,
    TopologyError,
    UnsupportedElementError,
    UnsupportedVersionError,
)
from plexlayout.mesh import (
    BOUNDARY_LABEL,
    CELL_LABEL,
    interpolate_simplices,
    read_gmsh,
    reference_tet,
    unit_square_mesh,
)
from plexlayout.topology import euler_characteristic

HEADER = "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n"
NODES = "$Nodes\n3\n1 0 0 0\n2 1 0 0\n3 0 1 0\n$EndNodes\n"


def msh(*blocks: str) -> bytes:
    return "".join(blocks).encode("ascii")


def stratum_sizes(plex) -> list[int]:
    return [len(plex.depth_stratum(d)) for d in range(plex.max_depth + 1)]


class TestUnitSquareMesh:
    """Test cases for the structured square generator."""

    @pytest.mark.parametrize(
        "n, cells, vertices, edges",
        [(1, 2, 4, 5), (2, 8, 9, 16), (5, 50, 36, 85)],
    )
    def test_entity_counts(self, n, cells, vertices, edges):
        """cells = 2n^2, vertices = (n+1)^2, edges = 3n^2 + 2n."""
        plex = unit_square_mesh(n, n).plex
        assert stratum_sizes(plex) == [vertices, edges, cells]
        assert euler_characteristic(plex) == 1
        plex.validate()

    def test_rectangular_counts(self):
        """Non-square divisions follow the same formulas."""
        mesh = unit_square_mesh(3, 2)
        assert mesh.num_cells == 12
        assert stratum_sizes(mesh.plex) == [12, 3 * 6 + 3 + 2, 12]
        assert mesh.coordinates.shape == (12, 2)

    def test_chart_layout(self):
        """Cells come first, then vertices, then edges."""
        plex = unit_square_mesh(2, 2).plex
        assert plex.cells() == range(0, 8)
        assert plex.vertices() == range(8, 17)
        assert plex.depth_stratum(1) == range(17, 33)

    def test_boundary_sides(self):
        """Each side carries n boundary facets; interior edges are unlabelled."""
        n = 4
        mesh = unit_square_mesh(n, n)
        label = mesh.plex.get_label(BOUNDARY_LABEL)
        assert label is mesh.boundary_labels
        assert label.values() == [1, 2, 3, 4]
        for side in (1, 2, 3, 4):
            assert label.stratum_size(side) == n
        interior = len(mesh.plex.depth_stratum(1)) - len(label)
        assert interior == 3 * n * n + 2 * n - 4 * n

    def test_boundary_side_coordinates(self):
        """Facets marked 1 lie on x == 0 and facets marked 4 on y == 1."""
        mesh = unit_square_mesh(3, 3)
        for facet in mesh.boundary_labels.stratum(1):
            assert all(mesh.coordinate(v)[0] == 0.0 for v in mesh.plex.cone(facet))
        for facet in mesh.boundary_labels.stratum(4):
            assert all(mesh.coordinate(v)[1] == 1.0 for v in mesh.plex.cone(facet))

    @pytest.mark.parametrize("nx, ny", [(0, 1), (1, 0), (-2, 2)])
    def test_zero_divisions(self, nx, ny):
        """Divisions must be positive."""
        with pytest.raises(ArgumentError):
            unit_square_mesh(nx, ny)


class TestInterpolation:
    """Test cases for simplex interpolation."""

    def test_cell_order_does_not_change_counts(self):
        """Shuffling the input cells yields the same entity counts."""
        cells = np.array([[0, 1, 4], [0, 4, 3], [1, 2, 5], [1, 5, 4]])
        forward = interpolate_simplices(cells, 6).plex
        backward = interpolate_simplices(cells[::-1], 6).plex
        assert stratum_sizes(forward) == stratum_sizes(backward) == [6, 9, 4]

    def test_facet_opposite_vertex(self):
        """Local facet i of a cell is the one opposite its i-th vertex."""
        topology = interpolate_simplices(np.array([[0, 1, 2]]), 3)
        plex = topology.plex
        for i, facet in enumerate(plex.cone(0)):
            assert 1 + i not in plex.cone(facet)
        assert topology.facet_of[(1, 2)] == plex.cone(0)[0]

    def test_repeated_vertex(self):
        """Degenerate simplices are rejected."""
        with pytest.raises(TopologyError):
            interpolate_simplices(np.array([[0, 1, 1]]), 3)

    def test_vertex_out_of_range(self):
        """Cells must reference existing vertices."""
        with pytest.raises(IntegrityError):
            interpolate_simplices(np.array([[0, 1, 3]]), 3)

    def test_bad_shape(self):
        """Only triangles and tetrahedra are interpolated."""
        with pytest.raises(ArgumentError):
            interpolate_simplices(np.array([[0, 1]]), 2)


class TestReferenceTet:
    """Test cases for the reference tetrahedron."""

    def test_shape(self):
        """15 points with four boundary facets."""
        mesh = reference_tet()
        assert mesh.plex.chart_size == 15
        assert mesh.cell_dimension == 3
        assert mesh.geometric_dimension == 3
        assert mesh.boundary_labels.stratum(1) == [5, 6, 7, 8]
        mesh.plex.validate()

    def test_fresh_instances(self):
        """Labels on one instance do not leak into another."""
        first = reference_tet()
        first.plex.label_set("scratch", 1, 0)
        assert not reference_tet().plex.has_label("scratch")


class TestReadGmsh:
    """Test cases for the Gmsh MSH 2.2 reader."""

    def test_two_triangles_match_generator(self, fixture_path):
        """The two-triangle file has the topology of unit_square_mesh(1, 1)."""
        mesh = read_gmsh(fixture_path("two_triangles.msh"))
        assert mesh.plex.cones() == unit_square_mesh(1, 1).plex.cones()
        assert mesh.coordinates.shape == (4, 2)
        assert mesh.cell_dimension == 2

    def test_single_tet(self, fixture_path):
        """A tetrahedron file gives the 1/4/6/4 strata of the reference tet."""
        mesh = read_gmsh(fixture_path("single_tet.msh"))
        plex = mesh.plex
        assert plex.chart_size == 15
        assert stratum_sizes(plex) == stratum_sizes(reference_tet().plex) == [4, 6, 4, 1]
        assert [s.depth for s in plex.strata] == [3, 0, 2, 1]
        plex.validate()

    def test_physical_tags(self, fixture_path):
        """Boundary lines carry their physical tag; unused nodes are dropped."""
        mesh = read_gmsh(fixture_path("tagged_square.msh"))
        plex = mesh.plex
        assert len(plex.vertices()) == 4
        walls = mesh.boundary_labels.stratum(7)
        assert len(walls) == 2
        assert all(plex.depth(f) == 1 for f in walls)
        assert len(mesh.boundary_labels.stratum(8)) == 1
        assert plex.label_stratum(CELL_LABEL, 100) == [0, 1]

    def test_accepts_streams_and_bytes(self, fixture_path):
        """Paths, raw bytes and binary streams are all accepted."""
        raw = fixture_path("two_triangles.msh").read_bytes()
        assert read_gmsh(raw).plex.cones() == read_gmsh(io.BytesIO(raw)).plex.cones()

    def test_unsupported_version(self):
        """Only version 2.2 is read."""
        data = msh("$MeshFormat\n4.1 0 8\n$EndMeshFormat\n", NODES)
        with pytest.raises(UnsupportedVersionError) as excinfo:
            read_gmsh(data)
        assert excinfo.value.details["version"] == "4.1"

    def test_binary_rejected(self):
        """Binary files are rejected loudly."""
        with pytest.raises(MeshFormatError):
            read_gmsh(msh("$MeshFormat\n2.2 1 8\n$EndMeshFormat\n", NODES))

    def test_unsupported_element(self):
        """Quadrangles are not supported and the type code is reported."""
        data = msh(HEADER, NODES, "$Elements\n1\n1 3 2 1 1 1 2 3 1\n$EndElements\n")
        with pytest.raises(UnsupportedElementError) as excinfo:
            read_gmsh(data)
        assert excinfo.value.details["type_code"] == 3

    def test_undefined_node(self):
        """Elements may only reference declared nodes."""
        data = msh(HEADER, NODES, "$Elements\n1\n1 2 2 1 1 1 2 9\n$EndElements\n")
        with pytest.raises(IntegrityError):
            read_gmsh(data)

    def test_count_mismatch(self):
        """The declared entry count must match the section body."""
        data = msh(HEADER, "$Nodes\n4\n1 0 0 0\n$EndNodes\n")
        with pytest.raises(MeshFormatError):
            read_gmsh(data)

    def test_missing_file(self, tmp_path):
        """A missing file is a format error, not a raw OSError."""
        with pytest.raises(MeshFormatError):
            read_gmsh(tmp_path / "absent.msh")

    def test_no_cells(self):
        """Files without triangles or tetrahedra are rejected."""
        data = msh(HEADER, NODES, "$Elements\n1\n1 1 2 1 1 1 2\n$EndElements\n")
        with pytest.raises(MeshFormatError):
            read_gmsh(data)
