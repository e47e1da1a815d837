"""Seeded construction of polygon pairs in each geometric regime.

All randomness comes from an in-package splitmix64 stream so that a given
spec reproduces bit-identical instances on every platform and Python
version; the stdlib generators do not pin their integer-drawing methods
across versions, which would break golden tests.

Star polygons are built by sampling integer offsets in an annulus and
sorting them by exact angle with integer comparisons, so simplicity holds
by construction.  Collinearity is removed by rejection and redraw, never
by perturbing after the fact, keeping all coordinates exact; the check is
quadratic and is skipped above ``GP_CHECK_LIMIT`` total corners, where it
would dominate the runtime of benchmark sweeps and where none of the
certified desk-scale claims apply anyway.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from math import gcd
from typing import Optional

from .geom import GeometryError, Point
from .polygon import (
    PolygonView,
    collinear_triples_exist,
    is_simple,
    reversed_view,
)
from .oracle import convex_hull, hulls_disjoint_bruteforce, _inside_convex

#: Pairs with more corners than this skip the quadratic collinearity
#: rejection; see the module docstring.
GP_CHECK_LIMIT = 600

_MASK64 = (1 << 64) - 1


class GenerationError(RuntimeError):
    """The rejection budget ran out for the requested parameters."""


class SplitMix64:
    """splitmix64: tiny, well-known, and pinned by this implementation."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def int_in(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here."""
        return lo + self.next_u64() % (hi - lo + 1)

    def unit(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53


class Regime(Enum):
    DISJOINT_HULLS = "disjoint-hulls"
    INTERSECTING_HULLS = "intersecting-hulls"
    NESTED_HULLS = "nested-hulls"
    DISJOINT_POLYGONS_OVERLAPPING_HULLS = "disjoint-polygons-overlapping-hulls"


@dataclass(frozen=True)
class GenSpec:
    """Deterministic recipe for one instance pair."""

    seed: int
    n0: int
    n1: int
    regime: Regime
    coordinate_scale: int = 1000


def _angle_cmp(a: Point, b: Point) -> int:
    # Exact angular order of nonzero offsets around the origin, starting
    # at the positive x axis.  Offsets sharing a ray compare equal.
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return ha - hb
    cross = a[0] * b[1] - a[1] * b[0]
    return (cross < 0) - (cross > 0)


def _star_offsets(rng: SplitMix64, n: int, r_min: int, r_max: int) -> Optional[list[Point]]:
    # One offset per primitive lattice direction, so all corners sit at
    # distinct exact angles around the center by construction.
    lo2, hi2 = r_min * r_min, r_max * r_max
    by_direction: dict[Point, Point] = {}
    budget = 80 * n + 400
    while len(by_direction) < n:
        budget -= 1
        if budget <= 0:
            return None
        dx = rng.int_in(-r_max, r_max)
        dy = rng.int_in(-r_max, r_max)
        if lo2 <= dx * dx + dy * dy <= hi2:
            g = gcd(dx, dy)
            by_direction.setdefault(Point(dx // g, dy // g), Point(dx, dy))
    ordered = sorted(by_direction.values(), key=cmp_to_key(_angle_cmp))
    # Every consecutive wedge (wrap included) must span less than a half
    # turn: that makes the center interior and the polygon simple.
    for i in range(n):
        a = ordered[i]
        b = ordered[(i + 1) % n]
        if a[0] * b[1] - a[1] * b[0] <= 0:
            return None
    return ordered


def random_star_polygon(
    seed: int,
    n: int,
    center: Point = Point(0, 0),
    r_min: int = 500,
    r_max: int = 1000,
    check_collinear: bool = True,
    name: str = "",
) -> PolygonView:
    """Simple counterclockwise polygon star-shaped around ``center``.

    Corners sit at distinct exact angles around the center with radii in
    [r_min, r_max]; instances containing a collinear corner triple are
    redrawn (skipped when ``check_collinear`` is off for large n).
    Deterministic per (seed, parameters).
    """
    if n < 3:
        raise GeometryError(f"need n >= 3 corners, got {n}")
    if not 0 < r_min < r_max:
        raise GeometryError(f"need 0 < r_min < r_max, got {r_min}, {r_max}")
    rng = SplitMix64(seed)
    for _ in range(300):
        offsets = _star_offsets(rng, n, r_min, r_max)
        if offsets is None:
            continue
        pts = [Point(center[0] + o[0], center[1] + o[1]) for o in offsets]
        if check_collinear and collinear_triples_exist(pts):
            continue
        return PolygonView(pts, name=name)
    raise GenerationError(
        f"no valid star polygon after 300 attempts (n={n}, r=[{r_min},{r_max}])"
    )


def _inradius(view: PolygonView, center: Point) -> int:
    # Floor of the minimum distance from center to the boundary; the open
    # disk of this radius around the center lies inside the polygon.
    best = None
    n = view.n
    for i in range(n):
        a = view.corner(i)
        b = view.corner((i + 1) % n)
        ex, ey = b[0] - a[0], b[1] - a[1]
        px, py = center[0] - a[0], center[1] - a[1]
        dot = ex * px + ey * py
        ee = ex * ex + ey * ey
        if dot <= 0:
            d2 = px * px + py * py
        elif dot >= ee:
            qx, qy = center[0] - b[0], center[1] - b[1]
            d2 = qx * qx + qy * qy
        else:
            cross = ex * py - ey * px
            d2 = (cross * cross) // ee
        if best is None or d2 < best:
            best = d2
    return math.isqrt(best)


def _crescent(
    center: Point,
    r_outer: float,
    r_inner: float,
    ang_lo: float,
    ang_hi: float,
    n: int,
    rng: SplitMix64,
    name: str,
) -> PolygonView:
    # Thickened circular arc: outer boundary swept counterclockwise from
    # ang_lo to ang_hi, inner boundary swept back.  Small per-point radial
    # jitter breaks the collinearities that snapping regular arcs to the
    # grid would otherwise produce.  n >= 6.
    n_out = max(3, (2 * n) // 3)
    n_in = n - n_out
    pts: list[Point] = []
    for k in range(n_out):
        ang = ang_lo + (ang_hi - ang_lo) * k / (n_out - 1)
        r = r_outer * (1.0 + 0.01 * (rng.unit() - 0.5))
        pts.append(
            Point(
                center[0] + round(r * math.cos(ang)),
                center[1] + round(r * math.sin(ang)),
            )
        )
    for k in range(n_in):
        ang = ang_hi - (ang_hi - ang_lo) * (k + 1) / (n_in + 1)
        r = r_inner * (1.0 + 0.01 * (rng.unit() - 0.5))
        pts.append(
            Point(
                center[0] + round(r * math.cos(ang)),
                center[1] + round(r * math.sin(ang)),
            )
        )
    return PolygonView(pts, name=name)


def _polygons_disjoint(p0: PolygonView, p1: PolygonView) -> bool:
    from .geom import segments_intersect

    a = p0.corners
    b = p1.corners
    n0, n1 = len(a), len(b)
    for i in range(n0):
        for j in range(n1):
            if segments_intersect(a[i], a[(i + 1) % n0], b[j], b[(j + 1) % n1]):
                return False
    # No edge contact; containment would need one polygon inside the other.
    if _point_in_polygon(b[0], a) or _point_in_polygon(a[0], b):
        return False
    return True


def _point_in_polygon(p: Point, poly: tuple[Point, ...]) -> bool:
    # Even-odd ray crossing with exact arithmetic; boundary counts inside.
    from .geom import orient as _orient

    n = len(poly)
    inside = False
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        side = _orient(a, b, p)
        if (
            side == 0
            and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
        ):
            return True
        if (a[1] > p[1]) != (b[1] > p[1]):
            # The edge crosses the horizontal through p; it does so right
            # of p iff p lies left of an upward edge or right of a
            # downward one.
            if (side > 0) == (b[1] > a[1]):
                inside = not inside
    return inside


def _radius_for(spec: GenSpec, n: int) -> int:
    # Collinear triples among N random grid points scale like N**3 / r**2,
    # so the radius must grow like n**1.5 for the rejection loop to
    # terminate on general-position instances.
    return max(spec.coordinate_scale, 8 * n * math.isqrt(n))


def _gen_disjoint(rng: SplitMix64, spec: GenSpec) -> tuple[PolygonView, PolygonView]:
    r_max = _radius_for(spec, max(spec.n0, spec.n1))
    r_min = max(2, r_max // 2)
    gap = 2 * (r_max + 1) + 2 + rng.int_in(0, r_max)
    while True:
        dx = rng.int_in(-3 * r_max, 3 * r_max)
        dy = rng.int_in(-3 * r_max, 3 * r_max)
        if dx * dx + dy * dy > gap * gap:
            break
    check = spec.n0 + spec.n1 <= GP_CHECK_LIMIT
    p0 = random_star_polygon(
        rng.next_u64(), spec.n0, Point(0, 0), r_min, r_max, check, "p0"
    )
    p1 = random_star_polygon(
        rng.next_u64(), spec.n1, Point(dx, dy), r_min, r_max, check, "p1"
    )
    return p0, p1


def _gen_intersecting(rng: SplitMix64, spec: GenSpec) -> tuple[PolygonView, PolygonView]:
    r_max = spec.coordinate_scale
    r_min = max(2, r_max // 2)
    for _ in range(200):
        off = max(1, r_min // 2)
        dx = rng.int_in(-off, off)
        dy = rng.int_in(-off, off)
        p0 = random_star_polygon(rng.next_u64(), spec.n0, Point(0, 0), r_min, r_max, True, "p0")
        p1 = random_star_polygon(rng.next_u64(), spec.n1, Point(dx, dy), r_min, r_max, True, "p1")
        if not hulls_disjoint_bruteforce(p0, p1):
            h0, h1 = convex_hull(p0), convex_hull(p1)
            nested = all(_inside_convex(h0, q) for q in h1) or all(
                _inside_convex(h1, q) for q in h0
            )
            if not nested:
                return p0, p1
    raise GenerationError("no intersecting-hull pair found")


def _gen_nested(rng: SplitMix64, spec: GenSpec) -> tuple[PolygonView, PolygonView]:
    r_max = spec.coordinate_scale
    r_min = max(2, r_max // 2)
    for _ in range(200):
        p0 = random_star_polygon(rng.next_u64(), spec.n0, Point(0, 0), r_min, r_max, True, "p0")
        rho = _inradius(p0, Point(0, 0)) - 2
        if rho < 8:
            continue
        p1 = random_star_polygon(
            rng.next_u64(), spec.n1, Point(0, 0), max(2, rho // 2), rho, True, "p1"
        )
        return p0, p1
    raise GenerationError("no nested-hull pair found (polygon too spiky?)")


def _gen_overlapping_hulls(
    rng: SplitMix64, spec: GenSpec
) -> tuple[PolygonView, PolygonView]:
    # Interlocked crescents: a small crescent sits in the mouth cavity of
    # a large one, like a ball held in a clamp.  The big crescent's solid
    # part spans 250 degrees, so its hull contains the whole cavity and
    # with it the small polygon's hull: the hulls overlap although the
    # polygons are disjoint, and no line can have both polygons on one
    # side, which is what defeats the outer-tangent walk.
    if spec.n0 < 6 or spec.n1 < 6:
        raise GeometryError("crescent instances need n0, n1 >= 6")
    base = max(64, spec.coordinate_scale)
    for _ in range(300):
        rot0 = 2.0 * math.pi * rng.unit()
        rot1 = 2.0 * math.pi * rng.unit()
        r_out = base * 10.0 * (1.0 + 0.05 * (rng.unit() - 0.5))
        mouth_half = math.radians(125.0 + 4.0 * (rng.unit() - 0.5))
        p0 = _crescent(
            Point(0, 0), r_out, 0.55 * r_out,
            rot0 + math.pi - mouth_half, rot0 + math.pi + mouth_half,
            spec.n0, rng, "p0",
        )
        # The cavity disk has radius 0.55*r_out while the mouth chord sits
        # at cos(180 - mouth_half) >= 0.57*r_out from the center, so a
        # polygon inside radius 0.45*r_out stays in the cavity and in the
        # big hull with room to spare.
        r1 = 0.45 * r_out
        span_half = math.radians(110.0 + 20.0 * rng.unit())
        p1 = _crescent(
            Point(rng.int_in(-round(0.02 * r_out), round(0.02 * r_out)),
                  rng.int_in(-round(0.02 * r_out), round(0.02 * r_out))),
            r1, 0.55 * r1,
            rot1 - span_half, rot1 + span_half,
            spec.n1, rng, "p1",
        )
        if not (is_simple(p0) and is_simple(p1)):
            continue
        if not _polygons_disjoint(p0, p1):
            continue
        if hulls_disjoint_bruteforce(p0, p1):
            continue
        if set(p0.corners) & set(p1.corners):
            continue
        if collinear_triples_exist(sorted(set(p0.corners) | set(p1.corners))):
            continue
        return p0, p1
    raise GenerationError("no valid interlocking-crescent pair found")


def generate_pair(spec: GenSpec) -> tuple[PolygonView, PolygonView]:
    """Deterministic polygon pair satisfying the spec's regime.

    Both views come out counterclockwise.  Regime guarantees: disjoint
    hulls by construction (separated bounding disks); intersecting and
    nested hulls verified against the brute-force oracle during rejection;
    the overlapping-hulls regime emits disjoint interlocking crescents
    whose hulls provably overlap.
    """
    rng = SplitMix64(spec.seed)
    if spec.regime is Regime.DISJOINT_HULLS:
        make = _gen_disjoint
    elif spec.regime is Regime.INTERSECTING_HULLS:
        make = _gen_intersecting
    elif spec.regime is Regime.NESTED_HULLS:
        make = _gen_nested
    else:
        make = _gen_overlapping_hulls
    check = spec.n0 + spec.n1 <= GP_CHECK_LIMIT
    for _ in range(100):
        p0, p1 = make(rng, spec)
        if check:
            if set(p0.corners) & set(p1.corners):
                continue
            if collinear_triples_exist(sorted(set(p0.corners) | set(p1.corners))):
                continue
        return p0, p1
    raise GenerationError(f"no general-position pair for {spec}")
