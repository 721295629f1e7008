"""Boundary-intersection geometry and the geometric adjacency checker.

The structures here all live on the boundaries of grid cubes: corner sets
(the axis facets leaving a point), small-scale lattices (intersections of
the d fine-generation boundary hyperplane families), large-scale samplings
(the finite trace of the coarse-generation intersection inside the window
[0, n^j)^d), and modulated corner sets (one coarse boundary slice per axis,
reduced into the window).

The checker decides adjacency of d+1 grids from
  (i)  each initial point being n-far from the lattice of the others, and
  (ii) exact liminf/limsup over j of window distance and deviation between
       the i-th modulated corner set and the sampling of the others,
       normalized by n^j.
Condition (ii) limits are exact: past every preperiod the normalized offset
streams obey v(j+P) = (v(j) + K) / n^P with integer K, an affine
contraction, so two probes per phase pin each limit and the approach side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .algebraic import AdjacencyReport, Failure
from .digits import is_n_far
from .grids import GridRepresentation, GridSystem, generation_scale, location
from .rationals import circular_gap, frac_part, rational_sqrt


class InconclusiveError(Exception):
    """The horizon does not reach the probe generations of every phase."""

    def __init__(self, horizon: int, required: int) -> None:
        super().__init__(
            f"horizon {horizon} cannot certify the limits; "
            f"need at least {required} generations"
        )
        self.horizon = horizon
        self.required = required


class DegenerateLatticeError(ValueError):
    """Two defining points collide modulo the cell size, so the boundary
    intersection contains whole lines and is not a point set."""


@dataclass(frozen=True)
class CornerSet:
    """Union over axes i of the facet {y_i = x_i} of [x, x + n^-level)^d."""

    n: int
    corner: tuple[Fraction, ...]
    level: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "corner", tuple(Fraction(c) for c in self.corner))

    @property
    def d(self) -> int:
        return len(self.corner)

    @property
    def extent(self) -> Fraction:
        return generation_scale(self.n, self.level)


@dataclass(frozen=True)
class ModulatedCornerSet:
    """One coarse boundary slice per axis, reduced into [0, n^j)^d.

    The slice on axis s is {y : (y)_s = offsets[s]} intersected with the
    window; offsets[s] = (delta + location(j))_s mod n^j.
    """

    owner: GridRepresentation
    j: int
    offsets: tuple[Fraction, ...]

    @property
    def d(self) -> int:
        return len(self.offsets)

    @property
    def window(self) -> Fraction:
        return Fraction(self.owner.n**self.j)


@dataclass(frozen=True)
class SmallScaleLattice:
    """Intersection of the d generation-m boundary families, as points."""

    n: int
    deltas: tuple[tuple[Fraction, ...], ...]
    m: int

    def __post_init__(self) -> None:
        deltas = tuple(tuple(Fraction(c) for c in delta) for delta in self.deltas)
        object.__setattr__(self, "deltas", deltas)
        d = len(deltas)
        if d == 0 or any(len(delta) != d for delta in deltas):
            raise ValueError("need exactly d defining points in Q^d")
        if self.m < 0:
            raise ValueError("lattice level must be >= 0")
        if not is_separated(deltas):
            raise DegenerateLatticeError(
                "defining points share a coordinate mod 1"
            )
        scale = self.scale
        for i in range(d):
            for k in range(i + 1, d):
                for s in range(d):
                    if (deltas[i][s] - deltas[k][s]) % scale == 0:
                        raise DegenerateLatticeError(
                            f"points {i} and {k} collide on axis {s} "
                            f"mod {scale}; the intersection contains lines"
                        )

    @property
    def d(self) -> int:
        return len(self.deltas)

    @property
    def scale(self) -> Fraction:
        return generation_scale(self.n, self.m)

    def axis_residues(self, s: int) -> tuple[Fraction, ...]:
        """Coordinates mod scale occurring on axis s among lattice points."""
        return tuple(sorted({delta[s] % self.scale for delta in self.deltas}))

    def points_in(self, box) -> tuple[tuple[Fraction, ...], ...]:
        """All lattice points inside a half-open box, sorted."""
        if box.d != self.d:
            raise ValueError("box dimension does not match the lattice")
        scale = self.scale
        found: set[tuple[Fraction, ...]] = set()
        for sigma in permutations(range(self.d)):
            per_axis = []
            for s in range(self.d):
                first = box.anchor[s] + (self.deltas[sigma[s]][s] - box.anchor[s]) % scale
                coords = []
                c = first
                while c < box.anchor[s] + box.side:
                    coords.append(c)
                    c += scale
                per_axis.append(coords)
            found.update(product(*per_axis))
        return tuple(sorted(found))


@dataclass(frozen=True)
class LargeScaleSampling:
    """Coarse boundary intersection of d grids inside [0, n^j)^d."""

    reps: tuple[GridRepresentation, ...]
    j: int
    points: tuple[tuple[Fraction, ...], ...]

    @property
    def d(self) -> int:
        return len(self.reps)

    @property
    def window(self) -> Fraction:
        return Fraction(self.reps[0].n**self.j)


@dataclass(frozen=True)
class FarVectorReport:
    far: bool
    witness_constant: Fraction | None
    scaled_distances: tuple[Fraction, ...]


@dataclass(frozen=True)
class GridDiagnostics:
    """Per-grid record behind the geometric verdict."""

    grid: int
    far: bool
    witness_constant: Fraction | None
    liminf: Fraction | None
    limsup: Fraction | None


def is_separated(deltas) -> bool:
    """No two points share any coordinate mod 1."""
    deltas = [tuple(Fraction(c) for c in delta) for delta in deltas]
    for i in range(len(deltas)):
        for k in range(i + 1, len(deltas)):
            if len(deltas[i]) != len(deltas[k]):
                raise ValueError("points have mismatched dimensions")
            for a, b in zip(deltas[i], deltas[k]):
                if (a - b).denominator == 1:
                    return False
    return True


def small_scale_lattice_points(
    deltas, n: int, m: int, box
) -> tuple[tuple[Fraction, ...], ...]:
    """Lattice of d points at level m, enumerated inside a box."""
    return SmallScaleLattice(n, tuple(tuple(c for c in d) for d in deltas), m).points_in(box)


def dist_boundary_to_lattice(rep_or_delta, m: int, lattice: SmallScaleLattice) -> Fraction:
    """Distance between a point's generation-m boundary and the lattice.

    Both sets repeat with cell n^-m, so the distance reduces to the closest
    circular gap, over axes, between the point's axis offset and any lattice
    residue on that axis.
    """
    delta = rep_or_delta.delta if isinstance(rep_or_delta, GridRepresentation) else tuple(
        Fraction(c) for c in rep_or_delta
    )
    if lattice.m != m:
        raise ValueError(f"lattice is at level {lattice.m}, not {m}")
    if len(delta) != lattice.d:
        raise ValueError("dimension mismatch with the lattice")
    scale = lattice.scale
    return min(
        circular_gap(delta[s], r, scale)
        for s in range(lattice.d)
        for r in lattice.axis_residues(s)
    )


def _difference_far(u: Fraction, n: int) -> tuple[bool, Fraction | None]:
    return is_n_far(u, n)


def is_n_far_vector(
    delta, others, n: int, scan_levels: int = 8
) -> FarVectorReport:
    """Whether inf_m n^m * dist(boundary_m(delta), lattice_m(others)) > 0.

    The scaled distance at level m is min over the others and axes of the
    distance from the componentwise difference to n^-m Z, scaled by n^m;
    its infimum over m is positive iff every such difference is n-far.
    Collisions among the others mod n^-m put lines into the lattice, which
    meet every boundary family, so any base-divisible internal difference
    forces the infimum to zero as well.  scan_levels bounds the per-level
    diagnostic distances reported alongside the decision.
    """
    delta = tuple(Fraction(c) for c in delta)
    others = [tuple(Fraction(c) for c in o) for o in others]
    d = len(delta)
    if len(others) != d or any(len(o) != d for o in others):
        raise ValueError("need exactly d defining points in Q^d")
    if not is_separated(others):
        raise ValueError("defining points must be separated")
    far = True
    witness: Fraction | None = None
    for other in others:
        for s in range(d):
            ok, c = _difference_far(delta[s] - other[s], n)
            if not ok:
                far = False
            elif witness is None or c < witness:
                witness = c
    internal_adic_level: int | None = None
    for i in range(len(others)):
        for k in range(i + 1, len(others)):
            for s in range(d):
                u = others[i][s] - others[k][s]
                ok, _ = _difference_far(u, n)
                if not ok:
                    far = False
                    level = 0
                    while (u * n**level).denominator != 1:
                        level += 1
                    if internal_adic_level is None or level < internal_adic_level:
                        internal_adic_level = level
    scan = []
    for m in range(scan_levels + 1):
        scale = generation_scale(n, m)
        if internal_adic_level is not None and m >= internal_adic_level:
            scan.append(Fraction(0))
            continue
        gap = min(
            circular_gap(delta[s], other[s], scale)
            for other in others
            for s in range(d)
        )
        scan.append(gap * n**m)
    return FarVectorReport(far, witness if far else None, tuple(scan))


def large_scale_sampling(reps, j: int) -> LargeScaleSampling:
    """One candidate point per assignment of grids to axes, reduced into
    the window [0, n^j)^d; coinciding candidates merge."""
    reps = tuple(reps)
    if not reps:
        raise ValueError("need at least one representation")
    n, d = reps[0].n, reps[0].d
    if len(reps) != d or any(r.n != n or r.d != d for r in reps):
        raise ValueError("need exactly d representations sharing base and dimension")
    if not is_separated([r.delta for r in reps]):
        raise ValueError("initial points must be separated")
    if j < 1:
        raise ValueError("sampling is defined for j >= 1")
    window = Fraction(n**j)
    offsets = [
        tuple((r.delta[s] + location(r, j)[s]) % window for s in range(d))
        for r in reps
    ]
    points = {
        tuple(offsets[sigma[s]][s] for s in range(d))
        for sigma in permutations(range(d))
    }
    return LargeScaleSampling(reps, j, tuple(sorted(points)))


def modulated_corner_set(rep: GridRepresentation, j: int) -> ModulatedCornerSet:
    if j < 0:
        raise ValueError("modulated corner sets are defined for j >= 0")
    window = Fraction(rep.n**j)
    offsets = tuple(
        (rep.delta[s] + location(rep, j)[s]) % window for s in range(rep.d)
    )
    return ModulatedCornerSet(rep, j, offsets)


def _inf_abs_over_interval(lo: Fraction, hi: Fraction) -> Fraction:
    """inf |t| over the half-open interval [lo, hi); the open end only
    changes attainment, not the infimum."""
    if lo > 0:
        return lo
    if hi <= 0:
        return -hi
    return Fraction(0)


def directional_dist(corner_set, x, axis: int) -> Fraction | None:
    """inf |t| with x + t e_axis in the realized set; None for a miss.

    Membership of the ray's fixed coordinates is tested against the true
    half-open facets; only the travel interval is closed by the infimum.
    """
    x = tuple(Fraction(c) for c in x)
    d = corner_set.d
    if len(x) != d or not 0 <= axis < d:
        raise ValueError("point or axis does not match the set")
    best: Fraction | None = None
    for piece, lo, hi, fixed in _pieces(corner_set):
        if piece != axis and x[piece] != fixed:
            continue
        cand: Fraction | None = None
        if piece == axis:
            if all(
                lo[i] <= x[i] < hi[i] for i in range(d) if i != axis
            ):
                cand = abs(fixed - x[axis])
        else:
            if all(
                lo[i] <= x[i] < hi[i]
                for i in range(d)
                if i not in (piece, axis)
            ):
                cand = _inf_abs_over_interval(lo[axis] - x[axis], hi[axis] - x[axis])
        if cand is not None and (best is None or cand < best):
            best = cand
    return best


def _pieces(corner_set):
    """Yield (normal_axis, lows, highs, fixed_value) per facet or slice."""
    d = corner_set.d
    if isinstance(corner_set, CornerSet):
        c, w = corner_set.corner, corner_set.extent
        for s in range(d):
            yield s, c, tuple(ci + w for ci in c), c[s]
    elif isinstance(corner_set, ModulatedCornerSet):
        zero = tuple(Fraction(0) for _ in range(d))
        top = tuple(corner_set.window for _ in range(d))
        for s in range(d):
            yield s, zero, top, corner_set.offsets[s]
    else:
        raise TypeError(f"unsupported set type {type(corner_set).__name__}")


def dev(corner_set, x) -> Fraction | None:
    """Natural deviation: max over axes of the directional distance."""
    out = Fraction(0)
    for k in range(corner_set.d):
        step = directional_dist(corner_set, x, k)
        if step is None:
            return None
        out = max(out, step)
    return out


def dist_point_set_squared(corner_set, x) -> Fraction:
    """Squared Euclidean distance from x to the closure of the set."""
    x = tuple(Fraction(c) for c in x)
    d = corner_set.d
    best: Fraction | None = None
    for piece, lo, hi, fixed in _pieces(corner_set):
        total = (x[piece] - fixed) ** 2
        for i in range(d):
            if i == piece:
                continue
            gap = max(lo[i] - x[i], x[i] - hi[i], Fraction(0))
            total += gap * gap
        if best is None or total < best:
            best = total
    return best


def dist_point_set(corner_set, x) -> Fraction:
    """Euclidean distance from x to the set; rational cases only."""
    squared = dist_point_set_squared(corner_set, x)
    root = rational_sqrt(squared)
    if root is None:
        raise ValueError(
            f"distance is the irrational sqrt({squared}); "
            "use dist_point_set_squared"
        )
    return root


def sampling_distance(mcs: ModulatedCornerSet, sampling: LargeScaleSampling) -> Fraction:
    """Window distance between the slices and the sampling points, with the
    window treated as a torus so that reduction mod n^j is isometric."""
    if mcs.j != sampling.j or mcs.d != sampling.d:
        raise ValueError("corner set and sampling must share window and dimension")
    window = mcs.window
    return min(
        circular_gap(point[s], mcs.offsets[s], window)
        for point in sampling.points
        for s in range(mcs.d)
    )


def sampling_deviation(mcs: ModulatedCornerSet, sampling: LargeScaleSampling) -> Fraction:
    """Largest natural deviation from a sampling point to the slices."""
    if mcs.j != sampling.j or mcs.d != sampling.d:
        raise ValueError("corner set and sampling must share window and dimension")
    worst = Fraction(0)
    for point in sampling.points:
        value = dev(mcs, point)
        assert value is not None  # slices span the window, points lie inside
        worst = max(worst, value)
    return worst


@dataclass(frozen=True)
class _Stream:
    """Limit data of one normalized offset stream along one phase.

    w(j) = ((delta + L(j))_s mod n^j) / n^j.  Unreduced, u(j) obeys the
    affine contraction u(j+P) = (u(j) + K) / n^P past the preperiod, so two
    probes give the fixed point and the (signed) approach; the reduced
    limit is then frac(u*), read as 1 instead of 0 when u* is an integer
    approached from below.
    """

    limit: Fraction
    probe1: Fraction
    probe2: Fraction

    def matches_forever(self, other: "_Stream") -> bool:
        gap1 = self.probe1 - other.probe1
        return gap1 == self.probe2 - other.probe2 and gap1.denominator == 1


def _phase_streams(rep: GridRepresentation, base: int, period: int) -> list[list[_Stream]]:
    """streams[s][r] for axis s and phase r = j mod period, j >= base."""
    n = rep.n
    out: list[list[_Stream]] = []
    shrink = n**period
    for s in range(rep.d):
        per_phase = []
        for r in range(period):
            j1 = base + (r - base) % period
            j2 = j1 + period
            v1 = Fraction(rep.delta[s] + location(rep, j1)[s], n**j1)
            v2 = Fraction(rep.delta[s] + location(rep, j2)[s], n**j2)
            fixed = Fraction(shrink * v2 - v1, shrink - 1)
            if fixed.denominator == 1:
                limit = Fraction(1) if v1 < fixed else Fraction(0)
            else:
                limit = frac_part(fixed)
            per_phase.append(_Stream(limit, v1, v2))
        out.append(per_phase)
    return out


def required_horizon(sys: GridSystem) -> int:
    """Smallest generation count that reaches both probes of every phase."""
    rows = [row for rep in sys.grids for row in rep.rows]
    preperiod = max(len(row.preperiod) for row in rows)
    period = math.lcm(*(len(row.period) for row in rows))
    return max(preperiod, 1) + 2 * period - 1


def _condition_two(
    sys: GridSystem, i: int, streams: list[list[list[_Stream]]], period: int
) -> tuple[Fraction, Fraction]:
    """Exact (liminf, limsup) of normalized distance and deviation for grid i."""
    d = sys.d
    others = [k for k in range(len(sys.grids)) if k != i]
    liminf: Fraction | None = None
    limsup: Fraction | None = None
    for r in range(period):
        near = min(
            circular_gap(streams[i][s][r].limit, streams[o][s][r].limit, Fraction(1))
            for o in others
            for s in range(d)
        )
        far = Fraction(0)
        for assign in permutations(others):
            if any(
                streams[i][s][r].matches_forever(streams[assign[s]][s][r])
                for s in range(d)
            ):
                continue
            far = max(
                far,
                max(
                    abs(streams[i][s][r].limit - streams[assign[s]][s][r].limit)
                    for s in range(d)
                ),
            )
        liminf = near if liminf is None else min(liminf, near)
        limsup = far if limsup is None else max(limsup, far)
    assert liminf is not None and limsup is not None
    return liminf, limsup


def check_adjacent_geometric(
    sys: GridSystem, horizon: int | None = None
) -> AdjacencyReport:
    """Decide adjacency of d+1 grids from the boundary geometry.

    Condition (i) failures subsume non-separated systems: a shared or
    base-divisible coordinate difference among the others degenerates their
    lattice into lines, giving farness distance zero.  Condition (ii) is
    evaluated only when (i) holds everywhere, which guarantees separation.
    """
    if len(sys.grids) != sys.d + 1:
        raise ValueError(
            f"adjacency is defined for d+1 = {sys.d + 1} grids, got {len(sys.grids)}"
        )
    required = required_horizon(sys)
    if horizon is not None and horizon < required:
        raise InconclusiveError(horizon, required)

    far_flags: list[tuple[bool, Fraction | None]] = []
    for i, rep in enumerate(sys.grids):
        far = True
        witness: Fraction | None = None
        others = [sys.grids[k].delta for k in range(len(sys.grids)) if k != i]
        for other in others:
            for s in range(sys.d):
                ok, c = _difference_far(rep.delta[s] - other[s], sys.n)
                if not ok:
                    far = False
                elif witness is None or c < witness:
                    witness = c
        for a in range(len(others)):
            for b in range(a + 1, len(others)):
                for s in range(sys.d):
                    ok, _ = _difference_far(others[a][s] - others[b][s], sys.n)
                    if not ok:
                        far = False
        far_flags.append((far, witness if far else None))

    failure = None
    for i, (far, _) in enumerate(far_flags):
        if not far:
            failure = Failure("far-vector", grid=i)
            break

    if failure is not None:
        diagnostics = tuple(
            GridDiagnostics(i, far, witness, None, None)
            for i, (far, witness) in enumerate(far_flags)
        )
        return AdjacencyReport(False, diagnostics, failure, "geometric")

    rows = [row for rep in sys.grids for row in rep.rows]
    preperiod = max(len(row.preperiod) for row in rows)
    period = math.lcm(*(len(row.period) for row in rows))
    base = max(preperiod, 1)
    streams = [_phase_streams(rep, base, period) for rep in sys.grids]

    diagnostics = []
    for i in range(len(sys.grids)):
        liminf, limsup = _condition_two(sys, i, streams, period)
        far, witness = far_flags[i]
        diagnostics.append(GridDiagnostics(i, far, witness, liminf, limsup))
        if failure is None and not (0 < liminf and limsup < 1):
            failure = Failure("limits", grid=i)
    return AdjacencyReport(failure is None, tuple(diagnostics), failure, "geometric")
