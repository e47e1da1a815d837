"""Brute-force ground truth: hulls, exhaustive tangent classification.

Everything here is quadratic-or-worse, allocation-heavy and test-grade on
purpose: it is the independent reference the fast walks are checked
against, so it shares no code path with them beyond the sign primitive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geom import GeometryError, Point, orient, segments_intersect
from .polygon import AnyView

#: Above this coordinate magnitude the vectorised classification switches
#: from int64 to Python-integer object arrays so cross products stay exact.
_INT64_SAFE = 1 << 29


class GeneralPositionError(ValueError):
    """Input violates the assumptions the oracle needs to be trustworthy."""


@dataclass(frozen=True)
class OracleReport:
    """Exhaustive classification of every corner pair of two polygons.

    A pair (i, j) names the line through corner i of the first polygon and
    corner j of the second.  ``separating_pairs`` holds the pairs whose
    line is a tangent of both polygons with the polygons on opposite
    sides, ``outer_pairs`` those with both on the same side.
    ``hulls_disjoint`` is computed independently from hull edges and
    containment, not from the tangent counts.
    """

    separating_pairs: frozenset[tuple[int, int]]
    outer_pairs: frozenset[tuple[int, int]]
    hulls_disjoint: bool


def _corner_list(view: AnyView) -> list[Point]:
    return [view.corner(i) for i in range(view.n)]


def convex_hull(view_or_points) -> list[Point]:
    """Counterclockwise convex hull via the monotone chain scan.

    Collinear points are dropped, so the result is strictly convex.
    Raises when all points are collinear.
    """
    if hasattr(view_or_points, "corner"):
        pts = _corner_list(view_or_points)
    else:
        pts = [p if isinstance(p, Point) else Point(p[0], p[1]) for p in view_or_points]
    pts = sorted(set(pts))
    if len(pts) < 3:
        raise GeometryError("hull needs at least 3 distinct points")

    def chain(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) > 1 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise GeometryError("degenerate hull: all points collinear")
    return hull


def _inside_convex(hull: list[Point], p: Point) -> bool:
    # Closed containment in a ccw strictly convex polygon.
    m = len(hull)
    return all(orient(hull[i], hull[(i + 1) % m], p) >= 0 for i in range(m))


def hulls_disjoint_bruteforce(p0: AnyView, p1: AnyView) -> bool:
    """True iff the convex hulls share no point (boundaries included)."""
    h0 = convex_hull(p0)
    h1 = convex_hull(p1)
    m0, m1 = len(h0), len(h1)
    for i in range(m0):
        a, b = h0[i], h0[(i + 1) % m0]
        for j in range(m1):
            if segments_intersect(a, b, h1[j], h1[(j + 1) % m1]):
                return False
    # No boundary contact: containment is then all-or-nothing per hull.
    if _inside_convex(h0, h1[0]) or _inside_convex(h1, h0[0]):
        return False
    return True


def classify_all_corner_pairs(p0: AnyView, p1: AnyView) -> OracleReport:
    """Classify the line through every corner pair of the two polygons.

    Requires general position: any sign that comes out zero apart from the
    two defining corners themselves aborts with a diagnostic, since the
    corner-pair enumeration only finds all common tangents when no tangent
    passes through an edge or a shared corner.
    """
    c0 = _corner_list(p0)
    c1 = _corner_list(p1)
    n0, n1 = len(c0), len(c1)
    coords = [abs(v) for p in c0 + c1 for v in p]
    dtype = np.int64 if max(coords) <= _INT64_SAFE else object
    a = np.array(c0, dtype=dtype)                      # (n0, 2)
    b = np.array(c1, dtype=dtype)                      # (n1, 2)
    d = b[None, :, :] - a[:, None, :]                  # b - a per pair
    allc = np.concatenate([a, b])                      # (N, 2)
    e = allc[None, None, :, :] - b[None, :, None, :]   # c - b per pair
    cross = d[:, :, None, 0] * e[:, :, :, 1] - d[:, :, None, 1] * e[:, :, :, 0]
    if dtype is object:
        sign = np.frompyfunc(lambda v: (v > 0) - (v < 0), 1, 1)(cross).astype(np.int64)
    else:
        sign = np.sign(cross)

    idx = np.arange(n0 + n1)
    expected0 = idx[None, None, :] == np.arange(n0)[:, None, None]
    expected1 = idx[None, None, :] == (n0 + np.arange(n1))[None, :, None]
    bad = (sign == 0) & ~expected0 & ~expected1
    if bad.any():
        i, j, k = map(int, np.argwhere(bad)[0])
        third = (c0 + c1)[k]
        raise GeneralPositionError(
            f"corner {third} is collinear with corners {c0[i]} and {c1[j]}; "
            "the input violates general position"
        )

    s_own = sign[:, :, :n0]
    s_other = sign[:, :, n0:]
    max0, min0 = s_own.max(axis=2), s_own.min(axis=2)
    max1, min1 = s_other.max(axis=2), s_other.min(axis=2)
    tangent0 = ~((max0 == 1) & (min0 == -1))
    tangent1 = ~((max1 == 1) & (min1 == -1))
    side0 = np.where(max0 == 1, 1, -1)
    side1 = np.where(max1 == 1, 1, -1)
    both = tangent0 & tangent1
    separating = both & (side0 != side1)
    outer = both & (side0 == side1)
    return OracleReport(
        frozenset((int(i), int(j)) for i, j in np.argwhere(separating)),
        frozenset((int(i), int(j)) for i, j in np.argwhere(outer)),
        hulls_disjoint_bruteforce(p0, p1),
    )
