"""Unit tests for the plex DAG and labels."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plexlayout.core.exceptions import (
    ArgumentError,
    LayoutError,
    NonConsecutiveStratumError,
    PointRangeError,
    TopologyError,
)
from plexlayout.mesh import unit_square_mesh
from plexlayout.topology import Label, build_from_cones, euler_characteristic

from tests.helpers import reachable


class TestBuildFromCones:
    """Test cases for plex construction."""

    def test_single_point(self):
        """A one-point chart is a lone vertex."""
        plex = build_from_cones(1, [[]])
        assert plex.depth(0) == 0
        assert plex.cone(0) == ()
        assert plex.support(0) == ()
        assert plex.max_depth == 0

    def test_supports_are_dual(self, interval_plex):
        """The shared vertex of an interval is supported by both cells."""
        assert interval_plex.support(3) == (0, 1)
        assert interval_plex.support(2) == (0,)
        interval_plex.validate()

    def test_cycle_rejected(self):
        """A cone cycle is a topology error."""
        with pytest.raises(TopologyError):
            build_from_cones(2, [[1], [0]])

    def test_repeated_cone_point_rejected(self):
        """A cone may not list a point twice."""
        with pytest.raises(TopologyError):
            build_from_cones(3, [[1, 1], [], []])

    def test_mixed_depth_cone_rejected(self):
        """Points in one cone share a depth."""
        with pytest.raises(TopologyError):
            build_from_cones(4, [[1, 2], [3], [], []])

    def test_non_consecutive_stratum(self):
        """An interrupted stratum names the offending point."""
        with pytest.raises(NonConsecutiveStratumError) as excinfo:
            build_from_cones(4, [[], [0, 2], [], [1]])
        assert isinstance(excinfo.value, LayoutError)
        assert excinfo.value.details["point"] == 1

    def test_cone_out_of_chart(self):
        """Cone entries must be chart points."""
        with pytest.raises(PointRangeError):
            build_from_cones(2, [[5], []])

    def test_wrong_number_of_cones(self):
        """One cone list per point."""
        with pytest.raises(ArgumentError):
            build_from_cones(3, [[], []])


class TestQueries:
    """Test cases for traversals and strata."""

    def test_out_of_chart_point(self, interval_plex):
        """Queries outside the chart raise a range error."""
        with pytest.raises(PointRangeError):
            interval_plex.cone(5)
        with pytest.raises(PointRangeError):
            interval_plex.closure(-1)

    def test_depth_out_of_range(self, interval_plex):
        """Strata exist only for depths up to the maximum."""
        with pytest.raises(PointRangeError):
            interval_plex.depth_stratum(2)
        with pytest.raises(PointRangeError):
            interval_plex.height_stratum(-1)

    def test_interval_adjacency(self, interval_plex):
        """adjacency is the closure of the star, without the seed."""
        assert interval_plex.adjacency(3) == [0, 1, 2, 4]
        assert interval_plex.adjacency(2) == [0, 3]

    def test_isolated_point_adjacency(self):
        """A lone point has no neighbours."""
        assert build_from_cones(1, [[]]).adjacency(0) == []

    def test_include_self(self, interval_plex):
        """The inclusive variants add the seed point."""
        assert interval_plex.closure(0, include_self=True) == [0, 2, 3]
        assert interval_plex.star(4, include_self=True) == [1, 4]

    def test_repeated_closure(self, interval_plex):
        """Repeated closures agree and callers may modify what they get back."""
        first = interval_plex.closure(0, include_self=True)
        first.append(99)
        assert interval_plex.closure(0, include_self=True) == [0, 2, 3]
        assert interval_plex.closure(0) == [2, 3]

    def test_closure_of_depth(self, tet):
        """Vertices of a facet."""
        assert tet.plex.closure_of_depth(5, 0) == [1, 2, 3]

    def test_duality_on_square(self):
        """q in cone(p) iff p in support(q) on a generated mesh."""
        plex = unit_square_mesh(3, 2).plex
        for p in range(plex.chart_size):
            for q in plex.cone(p):
                assert p in plex.support(q)
            for q in plex.support(p):
                assert p in plex.cone(q)

    def test_strata_order(self, tet):
        """Strata are listed in chart order."""
        assert [(s.depth, s.start, s.end) for s in tet.plex.strata] == [
            (3, 0, 1),
            (0, 1, 5),
            (2, 5, 9),
            (1, 9, 15),
        ]

    def test_renamed_has_no_strata(self, tet):
        """A renumbered plex stops reporting consecutive strata."""
        order = list(range(15))
        order[1], order[5] = order[5], order[1]
        renamed = tet.plex.renamed(order)
        assert not renamed.is_stratified
        with pytest.raises(LayoutError):
            renamed.strata
        assert list(renamed.depth_stratum(2)) == [1, 6, 7, 8]

    def test_euler_characteristic_square(self):
        """Planar triangulations of a disc have V - E + F == 1."""
        assert euler_characteristic(unit_square_mesh(2, 2).plex) == 1

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 4), st.integers(1, 4))
    def test_closure_matches_brute_force(self, nx, ny):
        """closure and star agree with a plain depth-first search."""
        plex = unit_square_mesh(nx, ny).plex
        cones = plex.cones()
        supports = [plex.support(p) for p in range(plex.chart_size)]
        for p in range(plex.chart_size):
            assert set(plex.closure(p)) == reachable(cones, p)
            assert set(plex.star(p)) == reachable(supports, p)


class TestLabel:
    """Test cases for labels."""

    def test_set_then_has(self, interval_plex):
        """A value set on a point is reported back."""
        interval_plex.label_set("marks", 7, 3)
        assert interval_plex.label_has("marks", 7, 3)
        assert not interval_plex.label_has("marks", 7, 2)

    def test_last_write_wins(self, interval_plex):
        """A point carries one value per label."""
        interval_plex.label_set("marks", 1, 2)
        interval_plex.label_set("marks", 2, 2)
        assert interval_plex.label_stratum("marks", 1) == []
        assert interval_plex.label_stratum("marks", 2) == [2]

    def test_missing_label(self, interval_plex):
        """Unknown labels raise an argument error."""
        with pytest.raises(ArgumentError):
            interval_plex.get_label("nope")

    def test_out_of_chart(self):
        """Labels validate point ids."""
        label = Label("l", 3)
        with pytest.raises(PointRangeError):
            label.set_value(1, 3)

    def test_clear_and_values(self):
        """Clearing the last point of a value drops the value."""
        label = Label("l", 4)
        label.set_value(5, 0)
        label.set_value(6, 1)
        label.clear_value(0)
        assert label.values() == [6]
        assert label.points() == [1]
        assert label.value(0) is None
        assert len(label) == 1

    def test_renamed(self):
        """Renaming moves values with their points."""
        label = Label("l", 3)
        label.set_value(9, 0)
        assert label.renamed([2, 0, 1]).stratum(9) == [2]
