"""Read-only polygon views: cyclic indexing, orientation, validation.

The tangent algorithms read their inputs exclusively through
``view.corner(i)``; everything else in this module is preprocessing and
validation machinery for test harnesses and the CLI.  Validation is
opt-in and never runs per corner access.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from .geom import GeometryError, Point, orient, segments_intersect


class Orientation(Enum):
    CCW = "ccw"
    CW = "cw"

    @property
    def opposite(self) -> "Orientation":
        return Orientation.CW if self is Orientation.CCW else Orientation.CCW


def _shoelace2(pts: Sequence[Point]) -> int:
    n = len(pts)
    total = 0
    for i in range(n):
        a = pts[i]
        b = pts[(i + 1) % n]
        total += a[0] * b[1] - b[0] * a[1]
    return total


class PolygonView:
    """Immutable indexed view of a polygon's corner sequence.

    ``corner(i)`` is defined for every integer ``i`` by reducing the index
    modulo ``n``.  The declared orientation is checked against the sign of
    the signed area at construction; corner lists with zero signed area
    (degenerate or self-crossing) keep whatever orientation the caller
    declared, since there is nothing to check against -- ``is_simple``
    is the validator for those.

    An optional read counter can be enabled for instrumented runs; a view
    with counting enabled belongs to a single run at a time.
    """

    __slots__ = ("_corners", "_n", "orientation", "name", "_reads")

    def __init__(
        self,
        corners: Iterable[Union[Point, tuple]],
        orientation: Optional[Orientation] = None,
        name: str = "",
    ) -> None:
        pts = tuple(p if isinstance(p, Point) else Point(p[0], p[1]) for p in corners)
        if len(pts) < 3:
            raise GeometryError(f"a polygon needs at least 3 corners, got {len(pts)}")
        area2 = _shoelace2(pts)
        detected = None
        if area2 > 0:
            detected = Orientation.CCW
        elif area2 < 0:
            detected = Orientation.CW
        if orientation is None:
            if detected is None:
                raise GeometryError(
                    "corner list has zero signed area; pass an explicit orientation"
                )
            orientation = detected
        elif detected is not None and orientation is not detected:
            raise GeometryError(
                f"declared orientation {orientation.value} but corner order is "
                f"{detected.value}"
            )
        self._corners = pts
        self._n = len(pts)
        self.orientation = orientation
        self.name = name
        self._reads: Optional[int] = None

    @property
    def n(self) -> int:
        return self._n

    def __len__(self) -> int:
        return self._n

    def corner(self, i: int) -> Point:
        """Corner at cyclic index ``i`` (any integer)."""
        if self._reads is not None:
            self._reads += 1
        return self._corners[i % self._n]

    @property
    def corners(self) -> tuple[Point, ...]:
        """The raw corner tuple; bypasses the read counter."""
        return self._corners

    def enable_read_counter(self) -> None:
        self._reads = 0

    @property
    def corner_reads(self) -> Optional[int]:
        """Number of corner() calls since counting was enabled, else None."""
        return self._reads

    def __repr__(self) -> str:
        label = self.name or "polygon"
        return f"<PolygonView {label} n={self._n} {self.orientation.value}>"


class ReversedView:
    """Reversed presentation of a view without copying corner data.

    ``corner(i)`` delegates to ``base.corner(-i)``, so index 0 maps to the
    same corner and the walk direction flips, as does the declared
    orientation.  Reads count against the base view's counter.
    """

    __slots__ = ("_base",)

    def __init__(self, base) -> None:
        self._base = base

    @property
    def n(self) -> int:
        return self._base.n

    def __len__(self) -> int:
        return self._base.n

    @property
    def orientation(self) -> Orientation:
        return self._base.orientation.opposite

    @property
    def name(self) -> str:
        return self._base.name

    def corner(self, i: int) -> Point:
        return self._base.corner(-i)

    def __repr__(self) -> str:
        return f"<ReversedView of {self._base!r}>"


AnyView = Union[PolygonView, ReversedView]


def reversed_view(view: AnyView) -> AnyView:
    """The reversed presentation of ``view``; unwraps double reversal."""
    if isinstance(view, ReversedView):
        return view._base
    return ReversedView(view)


def signed_area_times_two(view: AnyView) -> int:
    """Shoelace sum over the view's corners; positive iff counterclockwise."""
    return _shoelace2([view.corner(i) for i in range(view.n)])


def _adjacent_overlap(x: Point, shared: Point, y: Point) -> bool:
    # Edges (x, shared) and (shared, y) overlap beyond the shared corner
    # exactly when they are collinear and leave `shared` in the same
    # direction.
    if orient(x, shared, y) != 0:
        return False
    return (x[0] - shared[0]) * (y[0] - shared[0]) + (x[1] - shared[1]) * (
        y[1] - shared[1]
    ) > 0


def first_self_intersection(view: AnyView) -> Optional[tuple[int, int]]:
    """Indices of the first pair of edges violating simplicity, or None.

    Edge ``i`` runs from corner ``i`` to corner ``i+1``.  Non-adjacent
    edges must not intersect at all; adjacent edges must share exactly
    their common endpoint.  A repeated consecutive corner is reported as a
    violation of the degenerate edge and its successor.
    """
    n = view.n
    pts = [view.corner(i) for i in range(n)]
    for i in range(n):
        if pts[i] == pts[(i + 1) % n]:
            return (i, (i + 1) % n)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = pts[j], pts[(j + 1) % n]
            if j == i + 1:
                if _adjacent_overlap(a, b, d):
                    return (i, j)
            elif i == 0 and j == n - 1:
                if _adjacent_overlap(d, a, b):
                    return (i, j)
            elif segments_intersect(a, b, c, d):
                return (i, j)
    return None


def is_simple(view: AnyView) -> bool:
    """Quadratic simplicity test: no two edges touch except as neighbours."""
    return first_self_intersection(view) is None


@dataclass(frozen=True)
class ValidationReport:
    """Result of a general-position check.

    ``shared_corners`` lists points used as a corner by both polygons;
    ``collinear_groups`` lists, per offending line, every corner of the
    union lying on it (three or more).  An empty report means the inputs
    satisfy the assumptions under which the tangent results are certified.
    """

    shared_corners: tuple[Point, ...]
    collinear_groups: tuple[tuple[Point, ...], ...]

    @property
    def ok(self) -> bool:
        return not self.shared_corners and not self.collinear_groups

    def describe(self) -> str:
        if self.ok:
            return "general position: ok"
        lines = []
        for p in self.shared_corners:
            lines.append(f"shared corner: ({p.x}, {p.y})")
        for group in self.collinear_groups:
            pts = ", ".join(f"({p.x}, {p.y})" for p in group)
            lines.append(f"collinear corners: {pts}")
        return "\n".join(lines)


def _line_key(p: Point, q: Point) -> tuple[int, int, int]:
    # Canonical (dx, dy, c) for the line through p and q: direction reduced
    # by gcd and sign-normalised, offset c = dy*x - dx*y constant on the line.
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    g = gcd(dx, dy)
    dx //= g
    dy //= g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return (dx, dy, dy * p[0] - dx * p[1])


def collinear_triples_exist(points: Sequence[Point]) -> bool:
    """True iff some three of the given distinct points are collinear.

    Hashes the canonical line of every point pair; a line collecting a
    second pair already proves a collinear triple.
    """
    seen: set[tuple[int, int, int]] = set()
    m = len(points)
    for i in range(m):
        p = points[i]
        for j in range(i + 1, m):
            key = _line_key(p, points[j])
            if key in seen:
                return True
            seen.add(key)
    return False


def _collinear_groups(points: Sequence[Point]) -> tuple[tuple[Point, ...], ...]:
    buckets: dict[tuple[int, int, int], set[Point]] = {}
    m = len(points)
    for i in range(m):
        p = points[i]
        for j in range(i + 1, m):
            q = points[j]
            buckets.setdefault(_line_key(p, q), set()).update((p, q))
    groups = [
        tuple(sorted(pts)) for pts in buckets.values() if len(pts) >= 3
    ]
    return tuple(sorted(groups))


def check_general_position(p0: AnyView, p1: AnyView) -> ValidationReport:
    """Report every shared corner and collinear corner triple of the pair.

    Validator only: quadratic in the total corner count, allocates
    freely.  The tangent algorithms run fine without this check, but their
    certified behaviour assumes an empty report.
    """
    c0 = [p0.corner(i) for i in range(p0.n)]
    c1 = [p1.corner(i) for i in range(p1.n)]
    shared = tuple(sorted(set(c0) & set(c1)))
    union = sorted(set(c0) | set(c1))
    return ValidationReport(shared, _collinear_groups(union))
