"""Exactness and identities of the primitive predicates."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polytangent import (
    COORD_BOUND,
    CoordinateOverflow,
    GeometryError,
    Point,
    in_left_half_plane,
    orient,
    segments_intersect,
)

coords = st.integers(min_value=-COORD_BOUND, max_value=COORD_BOUND)
points = st.builds(Point, coords, coords)
small_points = st.builds(Point, st.integers(-8, 8), st.integers(-8, 8))


def rational_orient(a, b, c) -> int:
    """Independent oracle: sign of the doubled triangle area as exact
    rationals, using the three-term determinant expansion rather than the
    rotated-difference form the implementation uses."""
    v = (
        Fraction(a[0]) * (Fraction(b[1]) - Fraction(c[1]))
        + Fraction(b[0]) * (Fraction(c[1]) - Fraction(a[1]))
        + Fraction(c[0]) * (Fraction(a[1]) - Fraction(b[1]))
    )
    return (v > 0) - (v < 0)


def rational_segments_intersect(p, q, r, s) -> bool:
    """Independent oracle: solve the two-segment intersection with exact
    rational parameters instead of orientation tests."""
    d1x, d1y = q[0] - p[0], q[1] - p[1]
    d2x, d2y = s[0] - r[0], s[1] - r[1]
    denom = d1x * d2y - d1y * d2x
    ex, ey = r[0] - p[0], r[1] - p[1]
    if denom != 0:
        t = Fraction(ex * d2y - ey * d2x, denom)
        u = Fraction(ex * d1y - ey * d1x, denom)
        return 0 <= t <= 1 and 0 <= u <= 1
    # Parallel: intersect only if collinear and parameter ranges overlap.
    if ex * d1y - ey * d1x != 0:
        return False
    len2 = d1x * d1x + d1y * d1y
    t_r = Fraction(ex * d1x + ey * d1y, len2)
    t_s = Fraction((s[0] - p[0]) * d1x + (s[1] - p[1]) * d1y, len2)
    return max(0, min(t_r, t_s)) <= min(1, max(t_r, t_s))


class TestOrient:
    def test_left(self):
        assert orient(Point(0, 0), Point(1, 0), Point(0, 1)) == 1

    def test_collinear(self):
        assert orient(Point(0, 0), Point(1, 0), Point(2, 0)) == 0

    def test_right(self):
        assert orient(Point(0, 0), Point(1, 0), Point(1, -5)) == -1

    @given(points, points, points)
    @settings(max_examples=300)
    def test_matches_rational_oracle(self, a, b, c):
        assert orient(a, b, c) == rational_orient(a, b, c)

    @given(points, points, points)
    @settings(max_examples=200)
    def test_cyclic_and_antisymmetric(self, a, b, c):
        v = orient(a, b, c)
        assert orient(b, c, a) == v
        assert orient(c, a, b) == v
        assert orient(c, b, a) == -v
        assert orient(b, a, c) == -v
        assert orient(a, c, b) == -v

    @given(points, points, points,
           st.integers(-1000, 1000), st.integers(-1000, 1000))
    @settings(max_examples=200)
    def test_translation_invariance(self, a, b, c, tx, ty):
        bound = COORD_BOUND
        if any(abs(v + t) > bound for p in (a, b, c) for v, t in zip(p, (tx, ty))):
            return
        shift = lambda p: Point(p.x + tx, p.y + ty)
        assert orient(shift(a), shift(b), shift(c)) == orient(a, b, c)

    @given(small_points, small_points, small_points,
           st.integers(-3, 3), st.integers(1, 4))
    @settings(max_examples=200)
    def test_order_preserving_substitution(self, a, b, c, k, m):
        # a' and b' on the line through a and b, same direction.
        if a == b:
            return
        dx, dy = b.x - a.x, b.y - a.y
        a2 = Point(a.x + k * dx, a.y + k * dy)
        b2 = Point(a.x + (k + m) * dx, a.y + (k + m) * dy)
        assert (b.x - a.x) * (b2.x - a2.x) + (b.y - a.y) * (b2.y - a2.y) > 0
        assert orient(a2, b2, c) == orient(a, b, c)

    def test_exact_at_bound(self):
        b = COORD_BOUND
        # A sliver that floating-point evaluation gets wrong.
        a = Point(-b, -b)
        p = Point(b, b - 1)
        q = Point(b - 1, b - 2)
        assert orient(a, q, p) == rational_orient(a, q, p)


class TestPoint:
    def test_bounds_enforced(self):
        Point(COORD_BOUND, -COORD_BOUND)
        with pytest.raises(CoordinateOverflow):
            Point(COORD_BOUND + 1, 0)
        with pytest.raises(CoordinateOverflow):
            Point(0, 2**62)

    def test_floats_rejected(self):
        with pytest.raises(CoordinateOverflow):
            Point(1.0, 2)

    def test_value_semantics(self):
        assert Point(1, 2) == Point(1, 2)
        assert len({Point(1, 2), Point(1, 2)}) == 1


class TestHalfPlane:
    def test_strictly_left(self):
        assert in_left_half_plane(Point(0, 0), Point(1, 0), Point(0, 1))

    def test_boundary_is_included(self):
        assert in_left_half_plane(Point(0, 0), Point(1, 0), Point(2, 0))

    def test_strictly_right(self):
        assert not in_left_half_plane(Point(0, 0), Point(1, 0), Point(1, -1))

    def test_degenerate_line(self):
        with pytest.raises(GeometryError):
            in_left_half_plane(Point(1, 1), Point(1, 1), Point(0, 0))

    @given(points, points, points)
    @settings(max_examples=100)
    def test_rhp_is_lhp_swapped(self, a, b, c):
        if a == b:
            return
        assert in_left_half_plane(b, a, c) == (orient(a, b, c) <= 0)


class TestSegmentsIntersect:
    def test_proper_crossing(self):
        assert segments_intersect(Point(0, 0), Point(2, 2), Point(0, 2), Point(2, 0))

    def test_disjoint_collinear(self):
        assert not segments_intersect(Point(0, 0), Point(1, 0), Point(2, 0), Point(3, 0))

    def test_collinear_overlap(self):
        assert segments_intersect(Point(0, 0), Point(2, 0), Point(1, 0), Point(3, 0))

    def test_endpoint_touch(self):
        assert segments_intersect(Point(0, 0), Point(1, 1), Point(1, 1), Point(2, 0))

    def test_degenerate_rejected(self):
        with pytest.raises(GeometryError):
            segments_intersect(Point(0, 0), Point(0, 0), Point(1, 0), Point(2, 0))

    @given(small_points, small_points, small_points, small_points)
    @settings(max_examples=500)
    def test_matches_rational_oracle(self, p, q, r, s):
        if p == q or r == s:
            return
        assert segments_intersect(p, q, r, s) == rational_segments_intersect(p, q, r, s)
