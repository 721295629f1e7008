"""Cover queries, empirical cover-constant estimation, witness synthesis.

A system covers a query cube when some grid owns a cube containing it; the
quality of the cover is the sidelength ratio.  For adjacent systems the
ratio is bounded; witnesses certify the converse by straddling one boundary
hyperplane of every grid at a common generation, which blocks containment
at that generation and every finer one.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .algebraic import Failure, pair_limits
from .digits import SignedDigitSequence, is_n_far, phase_limits
from .grids import (
    GridCube,
    GridSystem,
    QueryCube,
    cube_containing,
    contains,
    generation_scale,
    location,
)
from .rationals import floor_log


@dataclass(frozen=True)
class CoverResult:
    found: bool
    cube: GridCube | None
    grid_index: int | None
    ratio: Fraction | None
    levels_searched: int


@dataclass(frozen=True)
class WitnessCube:
    """Query cube that no comparably sized grid cube contains.

    points are the two close boundary points the cube is built around; for
    constructions pinned to a single shared hyperplane they coincide.
    """

    cube: QueryCube
    guaranteed_ratio: Fraction
    construction: str
    points: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]


@dataclass(frozen=True)
class ScaleEstimate:
    level: int
    side: Fraction
    max_ratio: Fraction | None
    not_found: int


@dataclass(frozen=True)
class EstimateResult:
    max_ratio: Fraction | None
    per_scale: tuple[ScaleEstimate, ...]
    samples: int
    not_found: int


def cover_query(sys: GridSystem, q: QueryCube, max_coarsening: int) -> CoverResult:
    """Finest grid cube containing q, scanning coarser levels one by one.

    Containment per grid is monotone in coarseness, so the first level with
    a hit is minimal across the searched range.  The scan starts at the
    largest m with n^-m >= side(q); finer cubes cannot contain q at all.
    """
    if q.d != sys.d:
        raise ValueError("query dimension does not match the system")
    if max_coarsening < 0:
        raise ValueError("max_coarsening must be >= 0")
    m0 = floor_log(sys.n, 1 / q.side)
    searched = 0
    for m in range(m0, m0 - max_coarsening - 1, -1):
        searched += 1
        for gi, rep in enumerate(sys.grids):
            cube = cube_containing(rep, q.anchor, m)
            if contains(cube, q):
                return CoverResult(True, cube, gi, cube.side / q.side, searched)
    return CoverResult(False, None, None, None, searched)


def _sample_cube(sys: GridSystem, level: int, k: int, seed: int) -> QueryCube:
    """Deterministic sample cube; the stream key ignores the scale list so
    per-sample draws are stable under changes to the range."""
    rng = random.Random(f"{seed}:{level}:{k}")
    denominator = 10**4
    anchor = tuple(
        Fraction(rng.randrange(-2 * denominator, 2 * denominator), denominator)
        for _ in range(sys.d)
    )
    return QueryCube(anchor, generation_scale(sys.n, level))


def estimate_cover_constant(
    sys: GridSystem,
    scales,
    samples_per_scale: int,
    seed: int,
    workers: int = 1,
    budget: int = 12,
) -> EstimateResult:
    """Empirical maximum cover ratio over random cubes at the given scales.

    Deterministic for a fixed seed: every sample draws from its own
    counter-keyed stream and the max reduction is order independent, so
    worker count and scheduling cannot change the result.
    """
    if samples_per_scale < 1:
        raise ValueError("samples_per_scale must be >= 1")
    scales = [int(level) for level in scales]

    def run_one(task: tuple[int, int]) -> tuple[int, Fraction | None]:
        level, k = task
        result = cover_query(sys, _sample_cube(sys, level, k, seed), budget)
        return level, result.ratio

    tasks = [(level, k) for level in scales for k in range(samples_per_scale)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_one, tasks))
    else:
        outcomes = [run_one(t) for t in tasks]

    per_scale = []
    for level in scales:
        ratios = [r for lv, r in outcomes if lv == level and r is not None]
        misses = sum(1 for lv, r in outcomes if lv == level and r is None)
        per_scale.append(
            ScaleEstimate(
                level,
                generation_scale(sys.n, level),
                max(ratios) if ratios else None,
                misses,
            )
        )
    ratios = [s.max_ratio for s in per_scale if s.max_ratio is not None]
    return EstimateResult(
        max(ratios) if ratios else None,
        tuple(per_scale),
        len(tasks),
        sum(s.not_found for s in per_scale),
    )


def verification_budget(n: int, target_ratio: int) -> int:
    """Levels of coarsening that take a witness scan past ratio N."""
    return floor_log(n, Fraction(target_ratio)) + 2


def _adic_depth(u: Fraction, n: int) -> int:
    """Smallest m >= 0 with u * n^m an integer; u must not be n-far."""
    m = 0
    while (u * n**m).denominator != 1:
        m += 1
    return m


def witness_nonadjacent(
    sys: GridSystem, failure: Failure | None, N: int
) -> WitnessCube:
    """Build a cube every grid straddles at a common generation.

    Straddling one generation-m boundary hyperplane of a grid blocks
    containment by that grid at every generation >= m (boundaries refine
    downward), so any covering cube is at least n^(1-m) across.

    far-failure: the two offending grids share a whole hyperplane family at
    the divisibility depth of their position difference, and the witness
    straddles it; the remaining grids are straddled on their own axes.

    small-liminf / large-limsup: at a deep coarse generation j*, picked in
    a phase whose limit is the offending 0 or +-1, the two grids' axis-s
    hyperplane families pass within n^j*/(2N) of each other; the witness of
    side n^j*/N straddles both planes, blocking both grids up to generation
    -j*, hence ratio >= n N.

    grid-deficit: with at most d grids each one is pinned on its own axis
    at generation 0; every covering cube is then coarser than generation 0.
    """
    if N < 2:
        raise ValueError("target ratio N must be at least 2")
    n = sys.n

    if failure is None or failure.condition == "grid-deficit":
        if len(sys.grids) > sys.d:
            raise ValueError(
                "grid-deficit witnesses need at most d grids; "
                "pass a genuine condition failure instead"
            )
        center = [Fraction(0)] * sys.d
        for g in range(len(sys.grids)):
            center[g] = sys.grids[g].delta[g]
        side = Fraction(2, N)
        anchor = tuple(c - side / 2 for c in center)
        point = tuple(center)
        return WitnessCube(
            QueryCube(anchor, side), Fraction(N), "grid-deficit", (point, point)
        )

    if len(sys.grids) != sys.d + 1:
        raise ValueError("condition witnesses need a full system of d+1 grids")
    if failure.pair is None or failure.axis is None:
        raise ValueError("failure descriptor must carry pair and axis")
    k1, k2 = failure.pair
    s = failure.axis
    r1, r2 = sys.grids[k1], sys.grids[k2]
    u = r1.delta[s] - r2.delta[s]

    if failure.condition == "far":
        far, _ = is_n_far(u, n)
        if far:
            raise ValueError(f"difference {u} on axis {s} is n-far; not a failure")
        m1 = _adic_depth(u, n)
        scale = generation_scale(n, m1)
        center = [Fraction(0)] * sys.d
        center[s] = r1.delta[s]
        rest = [g for g in range(len(sys.grids)) if g not in (k1, k2)]
        free = [t for t in range(sys.d) if t != s]
        for g, t in zip(rest, free):
            center[t] = sys.grids[g].delta[t]
        side = Fraction(2, N) * scale
        anchor = tuple(c - side / 2 for c in center)
        point = tuple(center)
        return WitnessCube(
            QueryCube(anchor, side), Fraction(N), "far-failure", (point, point)
        )

    if failure.condition != "limits":
        raise ValueError(f"unknown failure condition {failure.condition!r}")

    diff = SignedDigitSequence.difference(r1.rows[s], r2.rows[s])
    limits = phase_limits(diff)
    lo, hi = pair_limits(r1, r2, s)
    if lo == 0:
        target = Fraction(0)
        tag = "small-liminf"
    elif hi == 1:
        target = next(l for l in limits if abs(l) == 1)
        tag = "large-limsup"
    else:
        raise ValueError(
            f"pair {failure.pair} axis {s} has limits ({lo}, {hi}); not a failure"
        )
    phase = next(r for r, l in enumerate(limits) if l == target)
    start = len(diff.preperiod)
    span = len(diff.period)

    j = start + phase
    if j < 1:
        j += span
    bound = 4 * N * max(abs(u), Fraction(1))
    while n**j < bound or abs(diff.ratio(j) - target) >= Fraction(1, 4 * N):
        j += span
    window = Fraction(n**j)
    c1 = r1.delta[s] + location(r1, j)[s]
    c2 = r2.delta[s] + location(r2, j)[s] + target * window
    center = [Fraction(0)] * sys.d
    center[s] = (c1 + c2) / 2
    rest = [g for g in range(len(sys.grids)) if g not in (k1, k2)]
    free = [t for t in range(sys.d) if t != s]
    for g, t in zip(rest, free):
        rep = sys.grids[g]
        center[t] = rep.delta[t] + location(rep, j)[t]
    side = window / N
    anchor = tuple(c - side / 2 for c in center)
    p1 = tuple(c1 if t == s else center[t] for t in range(sys.d))
    p2 = tuple(c2 if t == s else center[t] for t in range(sys.d))
    return WitnessCube(QueryCube(anchor, side), Fraction(N), tag, (p1, p2))
