"""Exact primitive predicates over integer grid points.

Every predicate in this package reduces to the sign of an integer cross
product, so every answer is exact.  There is no epsilon anywhere: the only
robustness requirement is the coordinate bound enforced at `Point`
construction, which keeps all intermediates well inside what Python's
integers handle exactly anyway (the bound exists as an interchange
contract, and so that fixed-width reimplementations of the file format
stay compatible).
"""

from __future__ import annotations

from typing import NamedTuple

#: Coordinates are limited to |x|, |y| <= 2**30.  A 64-bit signed
#: intermediate then suffices for the cross products below; Python's
#: arbitrary-precision integers would be exact regardless, but the bound
#: is part of the data contract.
COORD_BOUND = 1 << 30


class GeometryError(ValueError):
    """Degenerate input to a geometric operation."""


class CoordinateOverflow(ValueError):
    """Coordinate outside the exactness bound or not an integer."""


class _PointBase(NamedTuple):
    x: int
    y: int


class Point(_PointBase):
    """2D point on the integer grid. Immutable, hashable, bounds-checked."""

    __slots__ = ()

    def __new__(cls, x: int, y: int) -> "Point":
        if not isinstance(x, int) or not isinstance(y, int):
            raise CoordinateOverflow(
                f"coordinates must be integers, got ({x!r}, {y!r})"
            )
        if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
            raise CoordinateOverflow(
                f"|coordinate| must be <= 2**30, got ({x}, {y})"
            )
        return super().__new__(cls, x, y)


#: The three possible answers of `orient`.
SIGNS = (-1, 0, 1)


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the turn a -> b -> c.

    Returns +1 when `c` lies strictly left of the directed line from `a`
    to `b`, 0 when the three points are collinear, and -1 when `c` lies
    strictly right.  Computed as the sign of the cross product of b-a
    rotated a quarter turn counterclockwise with c-b; evaluation is exact.
    """
    cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
    return (cross > 0) - (cross < 0)


def in_left_half_plane(a: Point, b: Point, c: Point) -> bool:
    """True iff `c` lies in the closed half-plane left of the line a -> b.

    The boundary line itself belongs to the half-plane.  The right
    half-plane is obtained by swapping `a` and `b`.
    """
    if a == b:
        raise GeometryError(f"half-plane needs a directed line, got a == b == {a}")
    return orient(a, b, c) >= 0


def _covers(p: Point, q: Point, r: Point) -> bool:
    # r is known collinear with pq; is it inside the closed bounding box?
    return (
        min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
        and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
    )


def segments_intersect(p: Point, q: Point, r: Point, s: Point) -> bool:
    """True iff the closed segments pq and rs share at least one point.

    Exact; proper crossings, endpoint touches and collinear overlaps all
    count as intersections.
    """
    if p == q or r == s:
        raise GeometryError("segments must have two distinct endpoints")
    d1 = orient(p, q, r)
    d2 = orient(p, q, s)
    d3 = orient(r, s, p)
    d4 = orient(r, s, q)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    # Remaining intersections involve an endpoint on the other segment's
    # carrier line: endpoint touches and collinear overlaps.
    if d1 == 0 and _covers(p, q, r):
        return True
    if d2 == 0 and _covers(p, q, s):
        return True
    if d3 == 0 and _covers(r, s, p):
        return True
    if d4 == 0 and _covers(r, s, q):
        return True
    return False
