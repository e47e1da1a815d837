"""Common tangents of two simple polygons: linear time, constant workspace.

Both computations walk the polygons in parallel, maintaining a candidate
line through one corner of each.  Whenever the corner under the traversal
index lands strictly on the wrong side of the candidate line, the line is
rotated to pass through that corner and the other polygon's traversal is
rewound, because previously cleared corners may be on the wrong side of
the rotated line.  The working state is five integer indices plus
counters regardless of input size, and every corner access goes through
``view.corner(i)``.

Traversal caps guarantee termination: the separating walk gives up (no
separating tangent, hence the convex hulls intersect) when an update
would move a tangent corner index to twice the polygon length, while the
outer walk always runs to its caps and then verifies its answer with a
final linear sweep, since with intersecting hulls the walk can stop on a
line that is no tangent at all.  Whenever one polygon's traversal has
reached its cap, turns go to the other polygon alone; a rewind revives
the finished side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal, Optional, Union

from .geom import GeometryError, Point, orient
from .polygon import AnyView, Orientation, reversed_view

TangentKind = Literal["separating", "outer"]


@dataclass(frozen=True)
class TraceRecord:
    """State after one loop iteration: indices are unreduced."""

    iteration: int
    u: int
    s0: int
    s1: int
    t0: int
    t1: int
    updated: bool


#: Streaming callback invoked once per loop iteration.  The algorithm
#: stores nothing on behalf of the sink, so tracing does not grow the
#: working state; accumulate on the caller's side if needed.
TraceSink = Callable[[TraceRecord], None]


@dataclass
class RunStats:
    """Instrumentation of one run.

    ``iterations`` counts loop passes, ``corner_reads`` counts corner()
    calls including the verification sweep, ``updates`` counts tangent
    corner reassignments.  ``zero_orient_seen`` flags a collinear triple of
    three distinct points observed during the run: the inputs then violate
    the general-position assumption and the result is unverified.
    """

    iterations: int = 0
    corner_reads: int = 0
    updates: int = 0
    zero_orient_seen: bool = False


@dataclass(frozen=True)
class TangentResult:
    """A certified tangent: corner indices reduced to [0, n)."""

    kind: TangentKind
    s0: int
    s1: int
    stats: RunStats


@dataclass(frozen=True)
class NotSeparable:
    """No separating common tangent exists: the convex hulls intersect."""

    stats: RunStats


@dataclass(frozen=True)
class PreconditionUncertain:
    """The outer walk finished but its answer failed verification.

    This happens only when the convex hulls of the inputs were not
    disjoint.  The unverified corner pair is kept for diagnostics.
    """

    stats: RunStats
    s0: int
    s1: int


def _require(view: AnyView, want: Orientation, arg: str) -> None:
    if view.orientation is not want:
        raise GeometryError(
            f"{arg} must be given in {want.value} order, got {view.orientation.value}"
        )


def _separating_walk(
    p0: AnyView, p1: AnyView, target: int, sink: Optional[TraceSink]
) -> tuple[Optional[tuple[int, int]], RunStats]:
    # Walk with traversal caps 3n and abort threshold 2n; `target` is +1
    # for counterclockwise inputs and -1 for the mirrored variant running
    # on clockwise presentations.
    n0, n1 = p0.n, p1.n
    corner0, corner1 = p0.corner, p1.corner
    cap0, cap1 = 3 * n0, 3 * n1
    s0, t0, s1, t1, u = 0, 1, 0, 1, 0
    stats = RunStats()
    while t0 < cap0 or t1 < cap1:
        if (t0 >= cap0) if u == 0 else (t1 >= cap1):
            u = 1 - u
        stats.iterations += 1
        stats.corner_reads += 3
        updated = False
        if u == 0:
            a, b, c = corner1(s1), corner0(s0), corner0(t0)
        else:
            a, b, c = corner0(s0), corner1(s1), corner1(t1)
        sign = orient(a, b, c)
        if sign == 0 and c != b and c != a:
            stats.zero_orient_seen = True
        if sign == target:
            if u == 0:
                if t0 >= 2 * n0:
                    if sink is not None:
                        sink(TraceRecord(stats.iterations, u, s0, s1, t0, t1, False))
                    return None, stats
                s0 = t0
                t1 = s1 + 1
            else:
                if t1 >= 2 * n1:
                    if sink is not None:
                        sink(TraceRecord(stats.iterations, u, s0, s1, t0, t1, False))
                    return None, stats
                s1 = t1
                t0 = s0 + 1
            stats.updates += 1
            updated = True
        if u == 0:
            t0 += 1
        else:
            t1 += 1
        if sink is not None:
            sink(TraceRecord(stats.iterations, u, s0, s1, t0, t1, updated))
        u = 1 - u
    return (s0 % n0, s1 % n1), stats


def separating_common_tangent(
    p0: AnyView, p1: AnyView, sink: Optional[TraceSink] = None
) -> Union[TangentResult, NotSeparable]:
    """Separating common tangent leaving each polygon to its right.

    Both views must be counterclockwise.  On success the directed line
    from the returned corner of either polygon to the returned corner of
    the other leaves that other polygon entirely in the closed right
    half-plane; the two polygons end up on opposite sides.  Returns
    ``NotSeparable`` exactly when the convex hulls are not disjoint.
    """
    _require(p0, Orientation.CCW, "P0")
    _require(p1, Orientation.CCW, "P1")
    pair, stats = _separating_walk(p0, p1, 1, sink)
    if pair is None:
        return NotSeparable(stats)
    return TangentResult("separating", pair[0], pair[1], stats)


def second_separating_tangent(
    p0: AnyView, p1: AnyView, sink: Optional[TraceSink] = None
) -> Union[TangentResult, NotSeparable]:
    """The other separating common tangent (each polygon to its left).

    Runs the mirrored walk: both views presented in clockwise order, with
    the side test flipped to -1.  Indices in the result refer to the
    original views; trace records, if any, use the reversed indexing of
    the internal walk.
    """
    _require(p0, Orientation.CCW, "P0")
    _require(p1, Orientation.CCW, "P1")
    pair, stats = _separating_walk(reversed_view(p0), reversed_view(p1), -1, sink)
    if pair is None:
        return NotSeparable(stats)
    return TangentResult("separating", (-pair[0]) % p0.n, (-pair[1]) % p1.n, stats)


def _outer_walk(
    p0: AnyView, p1: AnyView, sink: Optional[TraceSink]
) -> tuple[tuple[int, int], RunStats]:
    # Walk with traversal caps 2n and no abort: termination comes from the
    # caps alone, so the answer is only trustworthy after verification.
    n0, n1 = p0.n, p1.n
    corner0, corner1 = p0.corner, p1.corner
    cap0, cap1 = 2 * n0, 2 * n1
    s0, t0, s1, t1, u = 0, 1, 0, 1, 0
    stats = RunStats()
    while t0 < cap0 or t1 < cap1:
        if (t0 >= cap0) if u == 0 else (t1 >= cap1):
            u = 1 - u
        stats.iterations += 1
        stats.corner_reads += 3
        updated = False
        a, b = corner0(s0), corner1(s1)
        c = corner0(t0) if u == 0 else corner1(t1)
        sign = orient(a, b, c)
        if sign == 0 and c != b and c != a:
            stats.zero_orient_seen = True
        if sign == 1:
            if u == 0:
                s0 = t0
                t1 = s1 + 1
            else:
                s1 = t1
                t0 = s0 + 1
            stats.updates += 1
            updated = True
        if u == 0:
            t0 += 1
        else:
            t1 += 1
        if sink is not None:
            sink(TraceRecord(stats.iterations, u, s0, s1, t0, t1, updated))
        u = 1 - u
    return (s0 % n0, s1 % n1), stats


def _sweep_right_of(
    a: Point, b: Point, view: AnyView, stats: RunStats
) -> bool:
    # Verify every corner of `view` lies in the closed right half-plane of
    # the directed line a -> b; flags unexpected collinearities.
    for k in range(view.n):
        p = view.corner(k)
        stats.corner_reads += 1
        sign = orient(a, b, p)
        if sign == 1:
            return False
        if sign == 0 and p != a and p != b:
            stats.zero_orient_seen = True
    return True


def outer_common_tangent(
    p0: AnyView, p1: AnyView, sink: Optional[TraceSink] = None
) -> Union[TangentResult, PreconditionUncertain]:
    """Outer common tangent with both polygons in its right half-plane.

    ``p0`` must be counterclockwise and ``p1`` clockwise.  The caller is
    responsible for the convex hulls being disjoint (establish it with
    ``separating_common_tangent`` or ``hulls_disjoint``); the walk always
    terminates and its answer is verified with one linear sweep over all
    corners, so a violated precondition yields ``PreconditionUncertain``
    rather than a silently wrong line.  A verified result is a genuine
    outer tangent even if the precondition was violated.
    """
    _require(p0, Orientation.CCW, "P0")
    _require(p1, Orientation.CW, "P1")
    (s0, s1), stats = _outer_walk(p0, p1, sink)
    a, b = p0.corner(s0), p1.corner(s1)
    stats.corner_reads += 2
    if _sweep_right_of(a, b, p0, stats) and _sweep_right_of(a, b, p1, stats):
        return TangentResult("outer", s0, s1, stats)
    return PreconditionUncertain(stats, s0, s1)


def second_outer_tangent(
    p0: AnyView, p1: AnyView, sink: Optional[TraceSink] = None
) -> Union[TangentResult, PreconditionUncertain]:
    """The mirror-image outer tangent: both polygons to its left.

    Same contract as ``outer_common_tangent`` (``p0`` counterclockwise,
    ``p1`` clockwise), but the certified half-plane is the closed left one
    of the directed line from the returned corner of ``p0`` to the
    returned corner of ``p1``; equivalently both polygons lie right of the
    reversed direction.  Implemented by swapping roles and reversing both
    presentations, then mapping indices back.
    """
    _require(p0, Orientation.CCW, "P0")
    _require(p1, Orientation.CW, "P1")
    swapped = outer_common_tangent(reversed_view(p1), reversed_view(p0), sink)
    if isinstance(swapped, TangentResult):
        return TangentResult(
            "outer",
            (-swapped.s1) % p0.n,
            (-swapped.s0) % p1.n,
            swapped.stats,
        )
    return PreconditionUncertain(
        swapped.stats, (-swapped.s1) % p0.n, (-swapped.s0) % p1.n
    )


def hulls_disjoint(p0: AnyView, p1: AnyView) -> bool:
    """Decide whether the convex hulls of the two polygons are disjoint.

    Linear time, constant workspace; input orientations may be anything,
    clockwise views are walked through their reversed presentation.
    """
    a = p0 if p0.orientation is Orientation.CCW else reversed_view(p0)
    b = p1 if p1.orientation is Orientation.CCW else reversed_view(p1)
    return isinstance(separating_common_tangent(a, b), TangentResult)
