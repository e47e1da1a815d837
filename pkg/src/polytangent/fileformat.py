"""The ``polytangent v1`` text format: bit-exact parse and serialize.

    polytangent v1
    poly <name> <n> <ccw|cw>
    <x> <y>
    ... n corner lines ...
    poly <name> <n> <ccw|cw>
    ...

Coordinates are decimal integers, fields are separated by single spaces,
lines end with LF and the file ends with a newline.  The declared
orientation is verified against the corner order, never inferred
silently, because the tangent operations assign meaning to it.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .geom import CoordinateOverflow, Point
from .polygon import (
    Orientation,
    PolygonView,
    ValidationReport,
    _collinear_groups,
    _shoelace2,
    first_self_intersection,
)

HEADER = "polytangent v1"


class PolygonFileError(ValueError):
    """Malformed polygon file; the message names the offending line."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _decode(data: Union[str, bytes]) -> list[str]:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise PolygonFileError(0, f"not UTF-8 text: {exc}") from None
    lines = data.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _check_orientation(pts: Sequence[Point], declared: Orientation, line_no: int) -> None:
    area2 = _shoelace2(pts)
    if area2 == 0:
        raise PolygonFileError(
            line_no, "corner list has zero signed area; orientation undecidable"
        )
    actual = Orientation.CCW if area2 > 0 else Orientation.CW
    if actual is not declared:
        raise PolygonFileError(
            line_no,
            f"declared {declared.value} but corners run {actual.value}",
        )


def _parse_blocks(lines: list[str], parse_coord) -> list[tuple[str, Orientation, list, int]]:
    if not lines or lines[0] != HEADER:
        raise PolygonFileError(1, f"expected header {HEADER!r}")
    blocks = []
    i = 1
    while i < len(lines):
        no = i + 1
        parts = lines[i].split(" ")
        if len(parts) != 4 or parts[0] != "poly":
            raise PolygonFileError(no, f"expected 'poly <name> <n> <ccw|cw>', got {lines[i]!r}")
        name = parts[1]
        try:
            n = int(parts[2])
        except ValueError:
            raise PolygonFileError(no, f"corner count is not an integer: {parts[2]!r}") from None
        if n < 3:
            raise PolygonFileError(no, f"a polygon needs at least 3 corners, got {n}")
        try:
            declared = Orientation(parts[3])
        except ValueError:
            raise PolygonFileError(no, f"orientation must be ccw or cw, got {parts[3]!r}") from None
        i += 1
        coords = []
        header_line = no
        for k in range(n):
            no = i + 1
            if i >= len(lines):
                raise PolygonFileError(no, f"unexpected end of file, expected corner {k + 1} of {n}")
            toks = lines[i].split(" ")
            if len(toks) != 2:
                raise PolygonFileError(no, f"expected '<x> <y>', got {lines[i]!r}")
            coords.append((parse_coord(toks[0], no), parse_coord(toks[1], no), no))
            i += 1
        blocks.append((name, declared, coords, header_line))
    if not blocks:
        raise PolygonFileError(2, "file contains no polygons")
    return blocks


def _int_coord(tok: str, line_no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise PolygonFileError(line_no, f"coordinate is not a decimal integer: {tok!r}") from None


def _float_coord(tok: str, line_no: int) -> float:
    try:
        return float(tok)
    except ValueError:
        raise PolygonFileError(line_no, f"coordinate is not a decimal number: {tok!r}") from None


def _build_views(blocks) -> list[PolygonView]:
    views = []
    for name, declared, coords, header_line in blocks:
        pts = []
        for x, y, no in coords:
            try:
                pts.append(Point(x, y))
            except CoordinateOverflow as exc:
                raise PolygonFileError(no, str(exc)) from None
        for k, p in enumerate(pts):
            if p == pts[(k + 1) % len(pts)]:
                raise PolygonFileError(
                    coords[k][2], f"duplicate consecutive corner ({p.x}, {p.y})"
                )
        _check_orientation(pts, declared, header_line)
        views.append(PolygonView(pts, declared, name))
    return views


def parse(data: Union[str, bytes]) -> list[PolygonView]:
    """Parse a canonical polygon file into validated views."""
    return _build_views(_parse_blocks(_decode(data), _int_coord))


def serialize(views: Iterable[PolygonView]) -> bytes:
    """Canonical byte form: parse(serialize(v)) reproduces v exactly."""
    out = [HEADER]
    for k, view in enumerate(views):
        name = view.name or f"p{k}"
        out.append(f"poly {name} {view.n} {view.orientation.value}")
        for p in view.corners:
            out.append(f"{p.x} {p.y}")
    return ("\n".join(out) + "\n").encode("utf-8")


def import_float(
    data: Union[str, bytes], scale: int
) -> tuple[list[PolygonView], ValidationReport]:
    """Parse a float-coordinate file, snapping to the integer grid.

    Each coordinate is multiplied by ``scale`` and rounded to the nearest
    integer (ties to even).  Snapping can merge corners, flip orientation
    or self-intersect the boundary; those are errors.  Collinearities the
    snap may have created are returned in the validation report rather
    than raised, since the tangent walks still run on such input.
    """
    if scale < 1:
        raise ValueError(f"scale must be a positive integer, got {scale}")
    blocks = _parse_blocks(_decode(data), _float_coord)
    snapped = []
    for name, declared, coords, header_line in blocks:
        snapped.append(
            (
                name,
                declared,
                [(round(x * scale), round(y * scale), no) for x, y, no in coords],
                header_line,
            )
        )
    views = _build_views(snapped)
    for view in views:
        bad = first_self_intersection(view)
        if bad is not None:
            i, j = bad
            raise PolygonFileError(
                0,
                f"polygon {view.name!r} is not simple after snapping: edges "
                f"{i} ({view.corner(i)}-{view.corner(i + 1)}) and "
                f"{j} ({view.corner(j)}-{view.corner(j + 1)}) intersect",
            )
    all_pts: set[Point] = set()
    shared: set[Point] = set()
    for view in views:
        mine = set(view.corners)
        shared |= all_pts & mine
        all_pts |= mine
    report = ValidationReport(
        tuple(sorted(shared)), _collinear_groups(sorted(all_pts))
    )
    return views, report
