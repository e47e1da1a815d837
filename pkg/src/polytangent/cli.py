"""Command-line front end.

Exit codes are a stable contract: 0 success, 1 input error, 2 no
separating tangent (convex hulls not disjoint), 3 outer tangent
precondition uncertain, 4 iteration or read bound violated (the most
serious failure this tool can detect).
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

import click

from .fileformat import PolygonFileError, import_float, parse, serialize
from .generator import GP_CHECK_LIMIT, GenSpec, GenerationError, Regime, generate_pair
from .geom import GeometryError
from .oracle import GeneralPositionError, classify_all_corner_pairs
from .polygon import (
    Orientation,
    check_general_position,
    is_simple,
    reversed_view,
)
from .svgrender import render_scene
from .tangents import (
    NotSeparable,
    PreconditionUncertain,
    TangentResult,
    hulls_disjoint,
    outer_common_tangent,
    second_outer_tangent,
    second_separating_tangent,
    separating_common_tangent,
)

EXIT_INPUT = 1
EXIT_NOT_SEPARABLE = 2
EXIT_UNCERTAIN = 3
EXIT_BOUND_VIOLATION = 4


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT)


def _load_two(path: str, snap_scale: int | None):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        _fail(str(exc))
    try:
        if snap_scale is None:
            views = parse(data)
        else:
            views, report = import_float(data, snap_scale)
            if not report.ok:
                click.echo(
                    "warning: snapping created general-position violations:\n"
                    + report.describe(),
                    err=True,
                )
    except (PolygonFileError, GeometryError, ValueError) as exc:
        _fail(str(exc))
    if len(views) != 2:
        _fail(f"expected exactly two polygons in {path}, got {len(views)}")
    return views[0], views[1]


def _ccw(view):
    return view if view.orientation is Orientation.CCW else reversed_view(view)


def _cw(view):
    return view if view.orientation is Orientation.CW else reversed_view(view)


def _file_index(view, used_view, idx: int) -> int:
    # Map an index in the (possibly reversed) walk view back to the file's
    # own corner numbering.
    if used_view is view:
        return idx
    return (-idx) % view.n


def _maybe_warn_general_position(p0, p1) -> None:
    if p0.n + p1.n > GP_CHECK_LIMIT:
        click.echo(
            "note: general-position validation skipped (input too large); "
            "results are certified only for inputs in general position",
            err=True,
        )
        return
    report = check_general_position(p0, p1)
    if not report.ok:
        click.echo(
            "warning: input violates general position; results are "
            "unverified:\n" + report.describe(),
            err=True,
        )


def _stats_dict(stats) -> dict:
    return {
        "iterations": stats.iterations,
        "corner_reads": stats.corner_reads,
        "updates": stats.updates,
        "zero_orient_seen": stats.zero_orient_seen,
    }


@click.group()
@click.version_option(package_name="polytangent")
def cli() -> None:
    """Common tangents of two simple polygons: linear time, O(1) workspace."""


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--kind", type=click.Choice(["separating", "outer", "all"]),
              default="all", show_default=True)
@click.option("--verify", is_flag=True,
              help="Check the results against the brute-force oracle.")
@click.option("--json", "as_json", is_flag=True,
              help="Emit a machine-readable record instead of text.")
@click.option("--snap-scale", type=int, default=None,
              help="Treat FILE as float coordinates, snap to grid at this scale.")
def tangents(file: str, kind: str, verify: bool, as_json: bool,
             snap_scale: int | None) -> None:
    """Compute common tangents of the two polygons in FILE."""
    p0, p1 = _load_two(file, snap_scale)
    if not verify:
        _maybe_warn_general_position(p0, p1)
    a0, a1 = _ccw(p0), _ccw(p1)
    w1 = _cw(p1)
    results = []
    if kind in ("separating", "all"):
        for variant, op in (("A", separating_common_tangent),
                            ("B", second_separating_tangent)):
            res = op(a0, a1)
            if isinstance(res, TangentResult):
                s0 = _file_index(p0, a0, res.s0)
                s1 = _file_index(p1, a1, res.s1)
                results.append(("separating", variant, "ok", s0, s1, res.stats))
            else:
                results.append(("separating", variant, "not_separable",
                                None, None, res.stats))
    if kind in ("outer", "all"):
        for variant, op in (("A", outer_common_tangent), ("B", second_outer_tangent)):
            res = op(a0, w1)
            s0 = _file_index(p0, a0, res.s0)
            s1 = _file_index(p1, w1, res.s1)
            if isinstance(res, TangentResult):
                results.append(("outer", variant, "ok", s0, s1, res.stats))
            else:
                results.append(("outer", variant, "precondition_uncertain",
                                s0, s1, res.stats))

    if verify:
        code = _verify_against_oracle(p0, p1, a0, a1, results, as_json)
        if code is not None:
            sys.exit(code)

    if as_json:
        record = {
            "schema": "polytangent.tangents/1",
            "kind": kind,
            "polygons": [
                {"name": v.name, "n": v.n, "orientation": v.orientation.value}
                for v in (p0, p1)
            ],
            "results": [
                {
                    "kind": rk,
                    "variant": variant,
                    "status": status,
                    "s0": s0,
                    "s1": s1,
                    "p0_corner": list(p0.corner(s0)) if s0 is not None else None,
                    "p1_corner": list(p1.corner(s1)) if s1 is not None else None,
                    "stats": _stats_dict(stats),
                }
                for rk, variant, status, s0, s1, stats in results
            ],
        }
        click.echo(json.dumps(record, indent=2, sort_keys=True))
    else:
        click.echo(
            f"polygons: {p0.name or 'p0'} (n={p0.n}, {p0.orientation.value}), "
            f"{p1.name or 'p1'} (n={p1.n}, {p1.orientation.value})"
        )
        for rk, variant, status, s0, s1, stats in results:
            tail = (f"iterations={stats.iterations} corner_reads={stats.corner_reads} "
                    f"updates={stats.updates}")
            if status == "ok":
                q0, q1 = p0.corner(s0), p1.corner(s1)
                click.echo(
                    f"{rk} tangent {variant}: P0[{s0}]=({q0.x}, {q0.y}) "
                    f"P1[{s1}]=({q1.x}, {q1.y}) | {tail}"
                )
            elif status == "not_separable":
                click.echo(
                    f"{rk} tangent {variant}: none, hulls not disjoint | {tail}"
                )
            else:
                click.echo(
                    f"{rk} tangent {variant}: uncertain, convex hulls were not "
                    f"disjoint so the walk result is unverified | {tail}"
                )

    statuses = {status for _, _, status, _, _, _ in results}
    if "not_separable" in statuses:
        sys.exit(EXIT_NOT_SEPARABLE)
    if "precondition_uncertain" in statuses:
        sys.exit(EXIT_UNCERTAIN)


def _verify_against_oracle(p0, p1, a0, a1, results, as_json) -> int | None:
    try:
        report = classify_all_corner_pairs(a0, a1)
    except GeneralPositionError as exc:
        _fail(f"oracle refused the instance: {exc}")
    # The oracle indexes the ccw presentations; map results the same way.
    got_sep = set()
    got_outer = set()
    for rk, _variant, status, s0, s1, _stats in results:
        if status != "ok":
            continue
        # s0/s1 are in file indexing; the oracle indexes the ccw views.
        i = s0 if a0 is p0 else (-s0) % p0.n
        j = s1 if a1 is p1 else (-s1) % p1.n
        (got_sep if rk == "separating" else got_outer).add((i, j))
    problems = []
    if got_sep and got_sep != set(report.separating_pairs):
        problems.append(
            f"separating mismatch: walk {sorted(got_sep)} vs oracle "
            f"{sorted(report.separating_pairs)}"
        )
    if not got_sep and report.separating_pairs:
        problems.append("walk found no separating tangent but the oracle did")
    if got_outer and got_outer != set(report.outer_pairs):
        problems.append(
            f"outer mismatch: walk {sorted(got_outer)} vs oracle "
            f"{sorted(report.outer_pairs)}"
        )
    if problems:
        for p in problems:
            click.echo(f"verify FAILED: {p}", err=True)
        return EXIT_INPUT
    click.echo(
        f"verify: oracle agrees ({len(report.separating_pairs)} separating, "
        f"{len(report.outer_pairs)} outer pairs; hulls_disjoint="
        f"{str(report.hulls_disjoint).lower()})",
        err=True,
    )
    return None


@cli.command("check-disjoint")
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--snap-scale", type=int, default=None)
def check_disjoint(file: str, snap_scale: int | None) -> None:
    """Decide whether the convex hulls of the two polygons are disjoint."""
    p0, p1 = _load_two(file, snap_scale)
    disjoint = hulls_disjoint(p0, p1)
    click.echo("true" if disjoint else "false")
    sys.exit(0 if disjoint else EXIT_NOT_SEPARABLE)


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--snap-scale", type=int, default=None)
def validate(file: str, snap_scale: int | None) -> None:
    """Check simplicity and the general-position assumptions."""
    p0, p1 = _load_two(file, snap_scale)
    failed = False
    for view in (p0, p1):
        simple = is_simple(view)
        click.echo(f"{view.name or 'polygon'}: n={view.n} "
                   f"{view.orientation.value} simple={str(simple).lower()}")
        failed |= not simple
    report = check_general_position(p0, p1)
    click.echo(report.describe())
    if failed or not report.ok:
        sys.exit(EXIT_INPUT)


@cli.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--n0", type=int, default=16, show_default=True)
@click.option("--n1", type=int, default=16, show_default=True)
@click.option("--regime", type=click.Choice([r.value for r in Regime]),
              default=Regime.DISJOINT_HULLS.value, show_default=True)
@click.option("--scale", type=int, default=1000, show_default=True,
              help="Base coordinate scale of the generated instance.")
@click.option("--out", type=click.Path(dir_okay=False, allow_dash=True),
              required=True)
def gen(seed: int, n0: int, n1: int, regime: str, scale: int, out: str) -> None:
    """Write a deterministic two-polygon instance file."""
    spec = GenSpec(seed=seed, n0=n0, n1=n1, regime=Regime(regime),
                   coordinate_scale=scale)
    try:
        p0, p1 = generate_pair(spec)
    except (GenerationError, GeometryError) as exc:
        _fail(str(exc))
    data = serialize([p0, p1])
    if out == "-":
        sys.stdout.buffer.write(data)
    else:
        Path(out).write_bytes(data)


@cli.command("trace-svg")
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--kind", type=click.Choice(["separating", "outer"]),
              default="separating", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--snap-scale", type=int, default=None)
def trace_svg(file: str, kind: str, out: str, snap_scale: int | None) -> None:
    """Render the walk of the chosen tangent computation as an SVG figure."""
    p0, p1 = _load_two(file, snap_scale)
    a0 = _ccw(p0)
    b1 = _ccw(p1) if kind == "separating" else _cw(p1)
    records = []
    sink = records.append
    if kind == "separating":
        res = separating_common_tangent(a0, b1, sink)
    else:
        res = outer_common_tangent(a0, b1, sink)
    # One dashed line for the initial candidate plus one per update.
    dashed = [(a0.corner(0), b1.corner(0))]
    for rec in records:
        if rec.updated:
            dashed.append((a0.corner(rec.s0), b1.corner(rec.s1)))
    solid = None
    note = None
    exit_code = 0
    if isinstance(res, TangentResult):
        solid = (a0.corner(res.s0), b1.corner(res.s1))
        note = (f"{kind} tangent: P0[{res.s0}] P1[{res.s1}] "
                f"({res.stats.iterations} iterations)")
    elif isinstance(res, NotSeparable):
        note = "no separating tangent: convex hulls intersect (NULL)"
        exit_code = EXIT_NOT_SEPARABLE
    else:
        note = "outer tangent uncertain: convex hulls were not disjoint"
        exit_code = EXIT_UNCERTAIN
    svg = render_scene(
        [(p0.name or "p0", [a0.corner(i) for i in range(a0.n)]),
         (p1.name or "p1", [b1.corner(i) for i in range(b1.n)])],
        dashed, solid, note,
    )
    Path(out).write_text(svg, encoding="utf-8")
    sys.exit(exit_code)


@cli.command()
@click.option("--sizes", default="16,64,256,1024,4096,16384", show_default=True,
              help="Comma-separated corner counts; each is used for both polygons.")
@click.option("--regime", type=click.Choice([r.value for r in Regime]),
              default=Regime.DISJOINT_HULLS.value, show_default=True)
@click.option("--kind", type=click.Choice(["separating", "outer"]),
              default="separating", show_default=True)
@click.option("--reps", type=int, default=1, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, allow_dash=True),
              default="-", show_default=True)
@click.option("--plot/--no-plot", default=True, show_default=True,
              help="Render a scaling figure next to the CSV (file output only).")
def bench(sizes: str, regime: str, kind: str, reps: int, seed: int,
          csv_path: str, plot: bool) -> None:
    """Measure iteration and read counts across sizes; enforce the bounds."""
    try:
        size_list = [int(tok) for tok in sizes.split(",") if tok]
    except ValueError:
        _fail(f"--sizes must be comma-separated integers, got {sizes!r}")
    if not size_list or any(n < 3 for n in size_list):
        _fail(f"--sizes entries must be >= 3, got {sizes!r}")
    if reps < 1:
        _fail("--reps must be >= 1")
    rows = []
    for idx, n in enumerate(size_list):
        spec = GenSpec(seed=seed + idx, n0=n, n1=n, regime=Regime(regime))
        try:
            p0, p1 = generate_pair(spec)
        except (GenerationError, GeometryError) as exc:
            _fail(f"generation failed at n={n}: {exc}")
        total = p0.n + p1.n
        for _rep in range(reps):
            start = time.perf_counter()
            if kind == "separating":
                res = separating_common_tangent(p0, p1)
                iter_bound, read_bound = 5 * total, 15 * total + 16
            else:
                res = outer_common_tangent(p0, _cw(p1))
                iter_bound, read_bound = 4 * total, 13 * total + 16
            elapsed = time.perf_counter() - start
            stats = res.stats
            if stats.iterations > iter_bound or stats.corner_reads > read_bound:
                click.echo(
                    f"BOUND VIOLATION at n0=n1={n}: iterations="
                    f"{stats.iterations} (bound {iter_bound}), corner_reads="
                    f"{stats.corner_reads} (bound {read_bound})",
                    err=True,
                )
                sys.exit(EXIT_BOUND_VIOLATION)
            rows.append({
                "n0": p0.n, "n1": p1.n,
                "iterations": stats.iterations,
                "corner_reads": stats.corner_reads,
                "wall_time": elapsed,
            })
    lines = ["n0,n1,iterations,corner_reads,wall_time"]
    for r in rows:
        lines.append(f"{r['n0']},{r['n1']},{r['iterations']},"
                     f"{r['corner_reads']},{r['wall_time']:.6f}")
    text = "\n".join(lines) + "\n"
    if csv_path == "-":
        sys.stdout.write(text)
    else:
        Path(csv_path).write_text(text, encoding="utf-8")
        if plot:
            from .plotting import save_bench_figure

            figure = str(Path(csv_path).with_suffix(".png"))
            save_bench_figure(rows, kind, figure)
            click.echo(f"wrote {csv_path} and {figure}", err=True)


def main(argv=None) -> None:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.Abort:
        sys.exit(EXIT_INPUT)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_INPUT)
    sys.exit(0)


if __name__ == "__main__":
    main()
