"""Views, cyclic indexing, simplicity and general-position validation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polytangent import (
    GeometryError,
    Orientation,
    Point,
    PolygonView,
    check_general_position,
    is_simple,
    random_star_polygon,
    reversed_view,
    signed_area_times_two,
)

UNIT_SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


class TestCornerIndexing:
    def test_wraparound(self):
        sq = PolygonView(UNIT_SQUARE)
        assert sq.corner(5) == Point(1, 0)
        assert sq.corner(0) == Point(0, 0)
        assert sq.corner(4) == Point(0, 0)

    def test_negative_indices(self):
        sq = PolygonView(UNIT_SQUARE)
        assert sq.corner(-1) == sq.corner(3)

    def test_read_counter(self):
        sq = PolygonView(UNIT_SQUARE)
        assert sq.corner_reads is None
        sq.enable_read_counter()
        sq.corner(0)
        sq.corner(17)
        sq.corner(17)
        assert sq.corner_reads == 3


class TestOrientationHandling:
    def test_ccw_detected(self):
        assert PolygonView(UNIT_SQUARE).orientation is Orientation.CCW

    def test_declared_mismatch_rejected(self):
        with pytest.raises(GeometryError):
            PolygonView(UNIT_SQUARE, Orientation.CW)

    def test_signed_area(self):
        assert signed_area_times_two(PolygonView(UNIT_SQUARE)) == 2
        cw = PolygonView(list(reversed(UNIT_SQUARE)))
        assert signed_area_times_two(cw) == -2
        assert cw.orientation is Orientation.CW

    def test_too_few_corners(self):
        with pytest.raises(GeometryError):
            PolygonView([(0, 0), (1, 0)])


class TestReversedView:
    def test_corner_mapping(self):
        sq = PolygonView(UNIT_SQUARE)
        rev = reversed_view(sq)
        assert rev.corner(0) == sq.corner(0)
        assert rev.corner(1) == sq.corner(3)
        assert rev.orientation is Orientation.CW

    def test_double_reversal_unwraps(self):
        sq = PolygonView(UNIT_SQUARE)
        assert reversed_view(reversed_view(sq)) is sq

    def test_no_copy(self):
        sq = PolygonView(UNIT_SQUARE)
        rev = reversed_view(sq)
        assert not hasattr(rev, "_corners")

    def test_reads_count_on_base(self):
        sq = PolygonView(UNIT_SQUARE)
        sq.enable_read_counter()
        reversed_view(sq).corner(2)
        assert sq.corner_reads == 1

    @given(st.integers(0, 200), st.integers(3, 12))
    @settings(max_examples=60)
    def test_reversal_identities(self, seed, n):
        poly = random_star_polygon(seed, n, r_min=20, r_max=60)
        rev = reversed_view(poly)
        for i in range(-n, 2 * n):
            assert rev.corner(i) == poly.corner(-i)
        assert signed_area_times_two(rev) == -signed_area_times_two(poly)


class TestIsSimple:
    def test_square(self):
        assert is_simple(PolygonView(UNIT_SQUARE))

    def test_bowtie(self):
        bow = PolygonView([(0, 0), (2, 2), (2, 0), (0, 2)], Orientation.CCW)
        assert not is_simple(bow)

    def test_triangle(self):
        assert is_simple(PolygonView([(0, 0), (4, 0), (2, 3)]))

    def test_degenerate_collinear_triangle(self):
        line = PolygonView([(0, 0), (1, 0), (2, 0)], Orientation.CCW)
        assert signed_area_times_two(line) == 0
        assert not is_simple(line)

    def test_spur_rejected(self):
        # Edge doubles back along its predecessor.
        spur = PolygonView([(0, 0), (4, 0), (2, 0), (2, 3)], Orientation.CCW)
        assert not is_simple(spur)

    def test_duplicate_corner_rejected(self):
        dup = PolygonView([(0, 0), (0, 0), (1, 1), (0, 1)], Orientation.CCW)
        assert not is_simple(dup)


class TestGeneralPosition:
    def test_clean_pair(self, gp_triangles):
        assert check_general_position(*gp_triangles).ok

    def test_shared_corner(self):
        p0 = PolygonView([(0, 0), (4, 1), (1, 4)])
        p1 = PolygonView([(0, 0), (9, 8), (3, 9)])
        report = check_general_position(p0, p1)
        assert report.shared_corners == (Point(0, 0),)
        assert not report.ok

    def test_collinear_triple_across_polygons(self):
        p0 = PolygonView([(0, 0), (4, 1), (1, 1)])
        p1 = PolygonView([(8, 2), (9, 8), (3, 9)])
        # (0,0), (4,1), (8,2) are collinear across the union.
        report = check_general_position(p0, p1)
        assert len(report.collinear_groups) == 1
        assert set(report.collinear_groups[0]) == {Point(0, 0), Point(4, 1), Point(8, 2)}

    def test_one_group_per_line(self):
        p0 = PolygonView([(0, 0), (1, 1), (5, 2)])
        p1 = PolygonView([(2, 2), (3, 3), (9, 5)])
        # Four points on the diagonal produce one group, not four triples.
        report = check_general_position(p0, p1)
        assert len(report.collinear_groups) == 1
        assert set(report.collinear_groups[0]) >= {Point(0, 0), Point(1, 1),
                                                   Point(2, 2), Point(3, 3)}

    def test_describe_mentions_violations(self):
        p0 = PolygonView([(0, 0), (4, 1), (1, 4)])
        p1 = PolygonView([(0, 0), (9, 8), (3, 9)])
        text = check_general_position(p0, p1).describe()
        assert "shared corner" in text
