"""Command-line frontend.

Exit codes: 0 adjacent/found, 1 not, 2 input error, 3 inconclusive.
All numbers printed are exact rational strings; decimal fields are
annotations only and never read back.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

from .algebraic import (
    check_adjacent_algebraic,
    check_via_projections,
)
from .cover import (
    cover_query,
    estimate_cover_constant,
    verification_budget,
    witness_nonadjacent,
)
from .figures import (
    KINDS,
    corner_figure,
    lattice_figure,
    modulated_figure,
    render_figure,
    sampling_figure,
    trajectory_figure,
)
from .geometry import InconclusiveError, check_adjacent_geometric
from .grids import location
from .rationals import format_point, parse_rational
from .serialize import (
    InputError,
    cover_result_to_dict,
    estimate_to_dict,
    load_system,
    parse_cube,
    report_to_dict,
    witness_to_dict,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _parse_indices(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise InputError(f"grid list {text!r}: {exc}") from exc


def _parse_point(text: str) -> tuple:
    try:
        return tuple(parse_rational(c.strip()) for c in text.split(","))
    except ValueError as exc:
        raise InputError(f"point {text!r}: {exc}") from exc


def _parse_levels(text: str) -> list[int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise InputError(f"scale range {text!r} must look like 'lo..hi'")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise InputError(f"scale range {text!r}: {exc}") from exc
    if lo > hi:
        raise InputError(f"scale range {text!r} is empty")
    return list(range(lo, hi + 1))


def cmd_check(args) -> int:
    system = load_system(args.spec)
    if args.mode == "algebraic":
        report = check_adjacent_algebraic(system)
        _emit(report_to_dict(report))
        return EXIT_OK if report.verdict else EXIT_NEGATIVE
    if args.mode == "geometric":
        report = check_adjacent_geometric(system, horizon=args.horizon)
        _emit(report_to_dict(report))
        return EXIT_OK if report.verdict else EXIT_NEGATIVE
    if args.mode == "projection":
        verdict = check_via_projections(system)
        _emit({"method": "projection", "verdict": verdict})
        return EXIT_OK if verdict else EXIT_NEGATIVE
    algebraic = check_adjacent_algebraic(system)
    geometric = check_adjacent_geometric(system, horizon=args.horizon)
    projection = check_via_projections(system)
    verdicts = {
        "algebraic": algebraic.verdict,
        "geometric": geometric.verdict,
        "projection": projection,
    }
    out = {
        "method": "all",
        "verdict": algebraic.verdict,
        "verdicts": verdicts,
        "reports": {
            "algebraic": report_to_dict(algebraic),
            "geometric": report_to_dict(geometric),
            "projection": {"method": "projection", "verdict": projection},
        },
    }
    if len(set(verdicts.values())) > 1:
        out["error"] = "checkers disagree"
        _emit(out)
        return EXIT_INPUT
    _emit(out)
    return EXIT_OK if algebraic.verdict else EXIT_NEGATIVE


def cmd_cover(args) -> int:
    system = load_system(args.spec)
    cube = parse_cube(args.cube, system.d)
    result = cover_query(system, cube, args.budget)
    _emit(cover_result_to_dict(result))
    return EXIT_OK if result.found else EXIT_NEGATIVE


def cmd_witness(args) -> int:
    system = load_system(args.spec)
    if len(system.grids) <= system.d:
        failure = None
    else:
        report = check_adjacent_algebraic(system)
        if report.verdict:
            _emit({"error": "system is adjacent; no witness exists"})
            return EXIT_NEGATIVE
        failure = report.failure
    witness = witness_nonadjacent(system, failure, args.target)
    budget = (
        args.budget
        if args.budget is not None
        else verification_budget(system.n, args.target)
    )
    check = cover_query(system, witness.cube, budget)
    out = witness_to_dict(witness)
    out["verification"] = cover_result_to_dict(check)
    out["verified"] = (not check.found) or check.ratio >= args.target
    _emit(out)
    return EXIT_OK


def cmd_estimate(args) -> int:
    system = load_system(args.spec)
    levels = _parse_levels(args.scales)
    result = estimate_cover_constant(
        system,
        levels,
        args.samples,
        args.seed,
        workers=args.workers,
        budget=args.budget,
    )
    _emit(estimate_to_dict(result))
    return EXIT_OK if result.max_ratio is not None and not result.not_found else EXIT_NEGATIVE


def cmd_figure(args) -> int:
    system = load_system(args.spec)

    def need(flag: str, value):
        if value is None:
            raise InputError(f"kind={args.kind} requires --{flag}")
        return value

    if args.kind == "lattice":
        box = None if args.box is None else parse_cube(args.box, system.d)
        indices = None if args.grids is None else _parse_indices(args.grids)
        data = lattice_figure(system, need("level", args.level), box, indices)
    elif args.kind == "corner":
        corner = _parse_point(need("corner", args.corner))
        data = corner_figure(system, corner, need("level", args.level))
    elif args.kind == "modulated":
        data = modulated_figure(system, need("grid", args.grid), need("j", args.j))
    elif args.kind == "sampling":
        indices = _parse_indices(need("grids", args.grids))
        data = sampling_figure(system, indices, need("j", args.j))
    else:
        data = trajectory_figure(system, need("grid", args.grid), need("j", args.j))
    sidecar = render_figure(data, args.out)
    _emit(
        {
            "kind": data["kind"],
            "out": args.out,
            "sidecar": sidecar,
            "points": len(data["points"]),
            "segments": len(data["segments"]),
        }
    )
    return EXIT_OK


def cmd_trajectory(args) -> int:
    system = load_system(args.spec)
    if not 0 <= args.grid < len(system.grids):
        raise InputError(f"grid index {args.grid} out of range")
    if args.j < 0:
        raise InputError("horizon must be >= 0")
    rep = system.grids[args.grid]
    rows = []
    for j in range(args.j + 1):
        point = tuple(c + off for c, off in zip(rep.delta, location(rep, j)))
        rows.append({"j": j, "point": format_point(point)})
    _emit({"grid": args.grid, "n": system.n, "rows": rows})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nadic",
        description="Adjacency checks, cover queries, and figures for n-adic grid systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide adjacency of a d+1 grid system")
    p.add_argument("spec", help="system description JSON file")
    p.add_argument(
        "--mode",
        choices=["algebraic", "geometric", "projection", "all"],
        default="all",
    )
    p.add_argument(
        "--horizon",
        type=int,
        default=None,
        help="digit horizon for the geometric checker (default: computed)",
    )
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cover", help="find a minimal covering grid cube")
    p.add_argument("spec")
    p.add_argument("cube", help="query cube, e.g. '2/5,2/5 len 1/20'")
    p.add_argument("--budget", type=int, default=8, help="coarsening levels to search")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("witness", help="construct a cube certifying non-adjacency")
    p.add_argument("spec")
    p.add_argument("--target", type=int, default=16, help="guaranteed cover ratio N")
    p.add_argument(
        "--budget",
        type=int,
        default=None,
        help="verification budget (default: enough levels to confirm N)",
    )
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("estimate", help="sample cover ratios across scales")
    p.add_argument("spec")
    p.add_argument("--scales", default="-8..8", help="level range 'lo..hi'")
    p.add_argument("--samples", type=int, default=200, help="cubes per scale")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=12)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("figure", help="render a planar figure to SVG + sidecar JSON")
    p.add_argument("spec")
    p.add_argument("--kind", choices=list(KINDS), required=True)
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--level", type=int, default=None, help="lattice/corner level")
    p.add_argument("--grid", type=int, default=None, help="grid index (0-based)")
    p.add_argument("--grids", default=None, help="grid indices, e.g. '0,1'")
    p.add_argument("--j", type=int, default=None, help="coarse generation index")
    p.add_argument("--corner", default=None, help="corner point, e.g. '1/3,1/3'")
    p.add_argument("--box", default=None, help="viewport, e.g. '0,0 len 1'")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("trajectory", help="print anchor-plus-location rows")
    p.add_argument("spec")
    p.add_argument("--grid", type=int, required=True, help="grid index (0-based)")
    p.add_argument("--j", type=int, required=True, help="largest generation index")
    p.set_defaults(func=cmd_trajectory)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InconclusiveError as exc:
        print(json.dumps({"error": str(exc)}), file=_sys.stderr)
        return EXIT_INCONCLUSIVE
    except (InputError, ValueError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=_sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
