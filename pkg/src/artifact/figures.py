"""Planar figure rendering: exact geometry to SVG plus a rational sidecar.

Rendering is the only place floats appear. Every point and segment that
lands in the SVG is also written to a sidecar JSON next to it as exact
rational strings, so golden tests read the sidecar and never compare
pixel coordinates.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .geometry import (
    CornerSet,
    SmallScaleLattice,
    _pieces,
    large_scale_sampling,
    modulated_corner_set,
)
from .grids import GridSystem, QueryCube, location
from .rationals import format_point

Point = tuple[Fraction, ...]
Segment = tuple[Point, Point]

KINDS = ("lattice", "corner", "modulated", "sampling", "trajectory")


def _require_planar(d: int) -> None:
    if d != 2:
        raise ValueError("figures are rendered for d=2 only")


def _slice_segments(corner_set) -> list[Segment]:
    """Each axis-normal piece of a corner-style set, as a planar segment."""
    segs: list[Segment] = []
    for piece, lo, hi, fixed in _pieces(corner_set):
        free = 1 - piece
        a = [fixed, fixed]
        b = [fixed, fixed]
        a[free] = lo[free]
        b[free] = hi[free]
        segs.append((tuple(a), tuple(b)))
    return segs


def _select(sys: GridSystem, grid_indices) -> tuple:
    out = []
    for i in grid_indices:
        if not 0 <= i < len(sys.grids):
            raise ValueError(f"grid index {i} out of range")
        out.append(sys.grids[i])
    return tuple(out)


def lattice_figure(
    sys: GridSystem,
    level: int,
    box: QueryCube | None = None,
    grid_indices=None,
) -> dict:
    """Point cloud of the small-scale lattice of d anchor points."""
    _require_planar(sys.d)
    if grid_indices is None:
        grid_indices = range(sys.d)
    reps = _select(sys, grid_indices)
    if len(reps) != sys.d:
        raise ValueError(f"lattice takes exactly {sys.d} grids")
    if box is None:
        box = QueryCube(tuple(Fraction(0) for _ in range(sys.d)), Fraction(1))
    lattice = SmallScaleLattice(sys.n, tuple(r.delta for r in reps), level)
    return {
        "kind": "lattice",
        "meta": {"level": level, "grids": list(grid_indices)},
        "points": list(lattice.points_in(box)),
        "segments": [],
    }


def corner_figure(sys: GridSystem, corner, level: int) -> dict:
    """The corner operation at a point: d facets through the corner."""
    cs = CornerSet(sys.n, tuple(corner), level)
    _require_planar(cs.d)
    return {
        "kind": "corner",
        "meta": {"level": level},
        "points": [cs.corner],
        "segments": _slice_segments(cs),
    }


def modulated_figure(sys: GridSystem, grid_index: int, j: int) -> dict:
    """One grid's coarse boundary slices reduced into the window [0, n^j)^2."""
    _require_planar(sys.d)
    (rep,) = _select(sys, [grid_index])
    mcs = modulated_corner_set(rep, j)
    return {
        "kind": "modulated",
        "meta": {"grid": grid_index, "j": j},
        "points": [mcs.offsets],
        "segments": _slice_segments(mcs),
    }


def sampling_figure(sys: GridSystem, grid_indices, j: int) -> dict:
    """d grids' window slices plus their finite intersection points."""
    _require_planar(sys.d)
    reps = _select(sys, grid_indices)
    sampling = large_scale_sampling(reps, j)
    segments: list[Segment] = []
    for rep in reps:
        segments.extend(_slice_segments(modulated_corner_set(rep, j)))
    return {
        "kind": "sampling",
        "meta": {"grids": list(grid_indices), "j": j},
        "points": list(sampling.points),
        "segments": segments,
    }


def trajectory_figure(sys: GridSystem, grid_index: int, horizon: int) -> dict:
    """The anchor-plus-location path of one grid for j = 0..horizon."""
    _require_planar(sys.d)
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    (rep,) = _select(sys, [grid_index])
    pts = [
        tuple(c + off for c, off in zip(rep.delta, location(rep, j)))
        for j in range(horizon + 1)
    ]
    return {
        "kind": "trajectory",
        "meta": {"grid": grid_index, "horizon": horizon},
        "points": pts,
        "segments": [(a, b) for a, b in zip(pts, pts[1:])],
    }


def sidecar_path(out: str) -> str:
    return os.path.splitext(out)[0] + ".json"


def sidecar_payload(data: dict) -> dict:
    return {
        "kind": data["kind"],
        "meta": data["meta"],
        "points": [format_point(p) for p in data["points"]],
        "segments": [
            [format_point(a), format_point(b)] for a, b in data["segments"]
        ],
    }


def render_figure(data: dict, out: str) -> str:
    """Write the SVG and its sidecar; returns the sidecar path."""
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    for a, b in data["segments"]:
        ax.plot(
            [float(a[0]), float(b[0])],
            [float(a[1]), float(b[1])],
            color="tab:blue",
            linewidth=1.5,
            solid_capstyle="butt",
        )
    if data["points"]:
        ax.scatter(
            [float(p[0]) for p in data["points"]],
            [float(p[1]) for p in data["points"]],
            s=28,
            color="tab:green",
            zorder=3,
        )
    ax.set_aspect("equal")
    ax.set_title(data["kind"])
    fig.savefig(out)
    plt.close(fig)
    side = sidecar_path(out)
    with open(side, "w", encoding="utf-8") as handle:
        json.dump(sidecar_payload(data), handle, indent=2)
        handle.write("\n")
    return side
