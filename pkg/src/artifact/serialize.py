"""JSON input and output for systems, reports, and engine results.

Every number crossing the boundary is an exact rational string "p/q" (or a
bare integer string); decimal renderings, where present, are annotations
computed from the exact value and never parsed back.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebraic import AdjacencyReport, Failure, PairDiagnostics
from .cover import CoverResult, EstimateResult, WitnessCube
from .digits import DigitSequence
from .geometry import GridDiagnostics
from .grids import GridRepresentation, GridSystem, QueryCube
from .rationals import format_point, format_rational, parse_rational


class InputError(ValueError):
    """Malformed spec file or malformed command-line value."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


def _parse_digit_row(obj, n: int, where: str) -> DigitSequence:
    _require(isinstance(obj, dict), f"{where}: digit row must be an object")
    preperiod = obj.get("preperiod", [])
    period = obj.get("period")
    _require(
        isinstance(preperiod, list) and all(isinstance(x, int) for x in preperiod),
        f"{where}: preperiod must be a list of integers",
    )
    _require(
        isinstance(period, list)
        and len(period) > 0
        and all(isinstance(x, int) for x in period),
        f"{where}: period must be a nonempty list of integers",
    )
    try:
        return DigitSequence(n, tuple(preperiod), tuple(period))
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from exc


def _parse_grid(obj, n: int, d: int, where: str) -> GridRepresentation:
    _require(isinstance(obj, dict), f"{where}: grid must be an object")
    for key in ("n", "d"):
        if key in obj:
            expected = n if key == "n" else d
            _require(
                obj[key] == expected,
                f"{where}: grid {key}={obj[key]} disagrees with system {key}={expected}",
            )
    delta_raw = obj.get("delta")
    rows_raw = obj.get("digit_rows")
    _require(
        isinstance(delta_raw, list) and len(delta_raw) == d,
        f"{where}: delta must list {d} rationals",
    )
    _require(
        isinstance(rows_raw, list) and len(rows_raw) == d,
        f"{where}: digit_rows must list {d} rows",
    )
    try:
        delta = tuple(parse_rational(c) for c in delta_raw)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from exc
    rows = tuple(
        _parse_digit_row(row, n, f"{where}.digit_rows[{i}]")
        for i, row in enumerate(rows_raw)
    )
    return GridRepresentation(n, delta, rows)


def parse_system(obj) -> GridSystem:
    """System description JSON object -> GridSystem."""
    _require(isinstance(obj, dict), "spec must be a JSON object")
    n = obj.get("n")
    d = obj.get("d")
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 2, "n must be an integer >= 2")
    _require(isinstance(d, int) and not isinstance(d, bool) and d >= 1, "d must be an integer >= 1")
    grids_raw = obj.get("grids")
    _require(
        isinstance(grids_raw, list) and len(grids_raw) > 0,
        "grids must be a nonempty list",
    )
    grids = tuple(
        _parse_grid(g, n, d, f"grids[{i}]") for i, g in enumerate(grids_raw)
    )
    return GridSystem(n, d, grids)


def load_system(path: str) -> GridSystem:
    try:
        with open(path, encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return parse_system(obj)


def system_to_dict(sys: GridSystem) -> dict:
    return {
        "n": sys.n,
        "d": sys.d,
        "grids": [
            {
                "n": rep.n,
                "d": rep.d,
                "delta": format_point(rep.delta),
                "digit_rows": [
                    {"preperiod": list(row.preperiod), "period": list(row.period)}
                    for row in rep.rows
                ],
            }
            for rep in sys.grids
        ],
    }


def parse_cube(text: str, d: int) -> QueryCube:
    """Cube literal "a1,a2,... len p/q" -> QueryCube."""
    parts = text.split("len")
    _require(len(parts) == 2, f"cube {text!r} must look like 'a1,a2 len p/q'")
    coords = [c.strip() for c in parts[0].strip().rstrip(",").split(",")]
    _require(len(coords) == d, f"cube {text!r} must have {d} anchor coordinates")
    try:
        anchor = tuple(parse_rational(c) for c in coords)
        side = parse_rational(parts[1].strip())
    except ValueError as exc:
        raise InputError(f"cube {text!r}: {exc}") from exc
    _require(side > 0, "cube sidelength must be positive")
    return QueryCube(anchor, side)


def _optional(x: Fraction | None) -> str | None:
    return None if x is None else format_rational(x)


def failure_to_dict(failure: Failure | None) -> dict | None:
    if failure is None:
        return None
    out: dict = {"condition": failure.condition}
    if failure.pair is not None:
        out["pair"] = list(failure.pair)
    if failure.grid is not None:
        out["grid"] = failure.grid
    if failure.axis is not None:
        out["axis"] = failure.axis
    return out


def report_to_dict(report: AdjacencyReport) -> dict:
    records = []
    for diag in report.diagnostics:
        if isinstance(diag, PairDiagnostics):
            records.append(
                {
                    "pair": list(diag.pair),
                    "axis": diag.axis,
                    "far": diag.far,
                    "C": _optional(diag.witness_constant),
                    "D1": format_rational(diag.liminf),
                    "D2": format_rational(diag.limsup),
                }
            )
        elif isinstance(diag, GridDiagnostics):
            records.append(
                {
                    "grid": diag.grid,
                    "far": diag.far,
                    "C": _optional(diag.witness_constant),
                    "liminf": _optional(diag.liminf),
                    "limsup": _optional(diag.limsup),
                }
            )
        else:
            raise TypeError(f"unknown diagnostic type {type(diag).__name__}")
    return {
        "method": report.method,
        "verdict": report.verdict,
        "diagnostics": records,
        "failure": failure_to_dict(report.failure),
    }


def cube_to_dict(cube: QueryCube) -> dict:
    return {"anchor": format_point(cube.anchor), "side": format_rational(cube.side)}


def cover_result_to_dict(result: CoverResult) -> dict:
    out: dict = {
        "found": result.found,
        "levels_searched": result.levels_searched,
    }
    if result.found:
        assert result.cube is not None and result.ratio is not None
        out["grid_index"] = result.grid_index
        out["level"] = result.cube.level
        out["index"] = list(result.cube.index)
        out["cube"] = cube_to_dict(result.cube.as_query_cube())
        out["ratio"] = format_rational(result.ratio)
        out["ratio_decimal"] = float(result.ratio)
    return out


def witness_to_dict(witness: WitnessCube) -> dict:
    return {
        "construction": witness.construction,
        "cube": cube_to_dict(witness.cube),
        "guaranteed_ratio": format_rational(witness.guaranteed_ratio),
        "points": [format_point(p) for p in witness.points],
    }


def estimate_to_dict(estimate: EstimateResult) -> dict:
    return {
        "max_ratio": _optional(estimate.max_ratio),
        "max_ratio_decimal": (
            None if estimate.max_ratio is None else float(estimate.max_ratio)
        ),
        "samples": estimate.samples,
        "not_found": estimate.not_found,
        "per_scale": [
            {
                "level": s.level,
                "side": format_rational(s.side),
                "max_ratio": _optional(s.max_ratio),
                "not_found": s.not_found,
            }
            for s in estimate.per_scale
        ],
    }
