"""Unit tests for star-forest halo exchange."""

import numpy as np
import pytest

from plexlayout.core.exceptions import AmbiguityError, ArgumentError, IntegrityError, LayoutError
from plexlayout.layout import global_numbering, lagrange_dof_layout
from plexlayout.mesh import unit_square_mesh
from plexlayout.parallel import DataSF, PointSF, ReduceOp, SFEdge, SFLeaf, derive_data_sf, sf_broadcast, sf_reduce

from tests.helpers import distributed, quadrants, with_sections


@pytest.fixture
def p1_halves(halves_4x4):
    return with_sections(halves_4x4, lagrange_dof_layout(2, 1))


def data_sf(ranks) -> DataSF:
    return derive_data_sf([sf for _, sf, _ in ranks], [section for _, _, section in ranks])


def sizes(ranks) -> list[int]:
    return [section.total_size for _, _, section in ranks]


class TestDeriveDataSF:
    """Test cases for derive_data_sf()."""

    def test_empty(self, sequential, square):
        """No leaves, no edges."""
        ranks = with_sections([sequential(square(2, 2))], lagrange_dof_layout(2, 1))
        assert len(data_sf(ranks)) == 0

    def test_p1_edges_are_leaf_vertices(self, p1_halves):
        """Each leaf vertex contributes one edge."""
        sf = data_sf(p1_halves)
        for rank, (local, point_sf, _) in enumerate(p1_halves):
            leaf_vertices = [p for p in point_sf.leaf_points() if local.plex.depth(p) == 0]
            assert len(sf.leaves_of(rank)) == len(leaf_vertices) > 0

    def test_p3_edge_points_contribute_two(self, halves_4x4):
        """Edge count is the DoF count summed over leaf points."""
        ranks = with_sections(halves_4x4, lagrange_dof_layout(2, 3))
        sf = data_sf(ranks)
        per_depth = (1, 2, 1)
        for rank, (local, point_sf, _) in enumerate(ranks):
            expected = sum(per_depth[local.plex.depth(p)] for p in point_sf.leaf_points())
            assert len(sf.leaves_of(rank)) == expected

    def test_count_mismatch(self, halves_4x4):
        """Leaf and root must carry the same number of DoFs."""
        p1 = with_sections(halves_4x4, lagrange_dof_layout(2, 1))
        p2 = with_sections(halves_4x4, lagrange_dof_layout(2, 2))
        with pytest.raises(LayoutError):
            derive_data_sf([sf for _, sf, _ in p1], [p1[0][2], p2[1][2]])

    def test_csv(self):
        """Edges serialize under a fixed header."""
        sf = DataSF(num_ranks=2, edges=(SFEdge(1, 0, 0, 3),))
        assert sf.to_csv() == "leaf_rank,leaf_idx,root_rank,root_idx\n1,0,0,3\n"


class TestDataSF:
    """Test cases for DataSF construction."""

    def test_duplicate_leaf(self):
        """A leaf slot has a single root."""
        with pytest.raises(IntegrityError):
            DataSF(num_ranks=2, edges=((1, 0, 0, 0), (1, 0, 0, 1)))

    def test_rank_out_of_range(self):
        """Edges must name existing ranks."""
        with pytest.raises(IntegrityError):
            DataSF(num_ranks=2, edges=((2, 0, 0, 0),))

    def test_index_out_of_bounds(self):
        """Exchanges check slots against the arrays."""
        sf = DataSF(num_ranks=2, edges=((1, 0, 0, 5),))
        with pytest.raises(IntegrityError):
            sf_broadcast(sf, [np.zeros(3), np.zeros(3)])

    def test_wrong_number_of_arrays(self):
        """One array per rank."""
        sf = DataSF(num_ranks=2)
        with pytest.raises(ArgumentError):
            sf_broadcast(sf, [np.zeros(3)])


class TestBroadcast:
    """Test cases for sf_broadcast()."""

    def test_ghosts_receive_owner_ids(self, p1_halves):
        """Broadcasting global ids fills every ghost slot with its owner's id."""
        numbering = global_numbering(p1_halves)
        sf = data_sf(p1_halves)
        seeded = [values.copy() for values in numbering]
        for r, values in enumerate(seeded):
            values[sf.leaves_of(r)] = -1
        out = sf_broadcast(sf, seeded)
        for r in range(2):
            assert out[r].tolist() == numbering[r].tolist()

    def test_idempotent(self, p1_halves):
        """Broadcasting twice equals broadcasting once."""
        sf = data_sf(p1_halves)
        values = [np.arange(n, dtype=np.float64) + 100 * r for r, n in enumerate(sizes(p1_halves))]
        once = sf_broadcast(sf, values)
        twice = sf_broadcast(sf, once)
        assert all(np.array_equal(a, b) for a, b in zip(once, twice, strict=True))

    def test_inputs_untouched(self, p1_halves):
        """Broadcast returns new arrays."""
        sf = data_sf(p1_halves)
        values = [np.zeros(n) for n in sizes(p1_halves)]
        values[0][:] = 1.0
        sf_broadcast(sf, values)
        assert not values[1].any()

    def test_empty(self):
        """An empty SF leaves the arrays as they are."""
        out = sf_broadcast(DataSF(num_ranks=1), [np.array([3, 4])])
        assert out[0].tolist() == [3, 4]


class TestReduce:
    """Test cases for sf_reduce()."""

    def test_sum_counts_multiplicity(self):
        """Leaves of 1 summed into roots of 0 give each root its leaf count."""
        mesh = unit_square_mesh(4, 4)
        ranks = with_sections(distributed(mesh, quadrants(4)), lagrange_dof_layout(2, 1))
        sf = data_sf(ranks)
        values = [np.zeros(n, dtype=np.int64) for n in sizes(ranks)]
        for r, v in enumerate(values):
            v[sf.leaves_of(r)] = 1
        out = sf_reduce(sf, values, ReduceOp.SUM)
        multiplicity = sf.root_multiplicity(sizes(ranks))
        for r in range(4):
            leaves = sf.leaves_of(r)
            roots = np.setdiff1d(np.arange(values[r].size), leaves)
            assert out[r][roots].tolist() == multiplicity[r][roots].tolist()
            assert out[r][leaves].tolist() == [1] * leaves.size
        assert sum(int(m.sum()) for m in multiplicity) == len(sf)
        assert max(int(m.max()) for m in multiplicity) == 3

    def test_max_with_negative_infinity(self, p1_halves):
        """Leaves at -inf never raise a root."""
        sf = data_sf(p1_halves)
        values = [np.full(n, 2.5) for n in sizes(p1_halves)]
        for r, v in enumerate(values):
            v[sf.leaves_of(r)] = -np.inf
        out = sf_reduce(sf, values, "max")
        for r in range(2):
            assert np.array_equal(out[r], values[r])

    def test_sum_after_zero_broadcast(self, p1_halves):
        """Reducing zeros leaves roots unchanged."""
        sf = data_sf(p1_halves)
        values = [np.arange(n, dtype=np.float64) for n in sizes(p1_halves)]
        for r, v in enumerate(values):
            v[sf.leaves_of(r)] = 0.0
        out = sf_reduce(sf, values, ReduceOp.SUM)
        assert all(np.array_equal(a, b) for a, b in zip(out, values, strict=True))

    def test_replace_round_trip(self, p1_halves):
        """With one leaf per root, replace after broadcast restores the roots."""
        sf = data_sf(p1_halves)
        values = [np.arange(n, dtype=np.float64) * (r + 1) for r, n in enumerate(sizes(p1_halves))]
        out = sf_reduce(sf, sf_broadcast(sf, values), ReduceOp.REPLACE)
        for r in range(2):
            roots = np.setdiff1d(np.arange(values[r].size), sf.leaves_of(r))
            assert np.array_equal(out[r][roots], values[r][roots])

    def test_replace_ambiguous(self):
        """Replace is undefined when a root has several leaves."""
        sf = DataSF(num_ranks=3, edges=((1, 0, 0, 0), (2, 0, 0, 0)))
        with pytest.raises(AmbiguityError):
            sf_reduce(sf, [np.zeros(1)] * 3, ReduceOp.REPLACE)

    def test_unknown_op(self):
        """Only sum, max and replace are supported."""
        with pytest.raises(ArgumentError):
            sf_reduce(DataSF(num_ranks=1), [np.zeros(1)], "min")

    def test_sum_order_fixed(self):
        """Float sums fold leaves in ascending rank order."""
        sf = DataSF(num_ranks=3, edges=((2, 0, 0, 0), (1, 0, 0, 0)))
        values = [np.array([1e16]), np.array([1.0]), np.array([-1e16])]
        out = sf_reduce(sf, values, ReduceOp.SUM)
        assert out[0][0] == (1e16 + 1.0) + -1e16


def test_point_sf_leaf_points():
    """PointSF lists its leaf points in order."""
    sf = PointSF(rank=1, leaves=(SFLeaf(4, 0, 2), SFLeaf(7, 0, 3)))
    assert sf.leaf_points() == [4, 7]
    assert len(sf) == 2
