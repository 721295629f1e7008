"""Digit-level adjacency decision for a system of d+1 grids.

Two conditions, both exact:

  (1) every componentwise difference of initial points is n-far, and
  (2) for every grid pair and axis, the normalized location differences
      (L1(j) - L2(j))_s / n^j have all their subsequential limits strictly
      inside (0, 1) in absolute value.

Both are decided from the eventually periodic digit data with rational
arithmetic, so the strict inequalities are unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .digits import SignedDigitSequence, is_n_far, periodic_limit_points
from .grids import GridRepresentation, GridSystem, alternate_representation


@dataclass(frozen=True)
class PairDiagnostics:
    """Exact per-pair, per-axis data behind the two conditions."""

    pair: tuple[int, int]
    axis: int
    far: bool
    witness_constant: Fraction | None
    liminf: Fraction
    limsup: Fraction

    @property
    def limits_ok(self) -> bool:
        return 0 < self.liminf and self.limsup < 1


@dataclass(frozen=True)
class Failure:
    """First failing condition, located by pair or grid and axis."""

    condition: str
    pair: tuple[int, int] | None = None
    grid: int | None = None
    axis: int | None = None


@dataclass(frozen=True)
class AdjacencyReport:
    verdict: bool
    diagnostics: tuple
    failure: Failure | None
    method: str


def pair_limits(
    r1: GridRepresentation, r2: GridRepresentation, s: int
) -> tuple[Fraction, Fraction]:
    """(min, max) of |limit| over limits of (L1(j) - L2(j))_s / n^j."""
    if r1.n != r2.n or r1.d != r2.d:
        raise ValueError("representations must share base and dimension")
    if not 0 <= s < r1.d:
        raise ValueError(f"axis {s} out of range for dimension {r1.d}")
    diff = SignedDigitSequence.difference(r1.rows[s], r2.rows[s])
    magnitudes = [abs(l) for l in periodic_limit_points(diff)]
    return min(magnitudes), max(magnitudes)


def _pair_diagnostics(sys: GridSystem) -> list[PairDiagnostics]:
    out = []
    for k1, k2 in combinations(range(len(sys.grids)), 2):
        r1, r2 = sys.grids[k1], sys.grids[k2]
        for s in range(sys.d):
            far, witness = is_n_far(r1.delta[s] - r2.delta[s], sys.n)
            lo, hi = pair_limits(r1, r2, s)
            out.append(PairDiagnostics((k1, k2), s, far, witness, lo, hi))
    return out


def check_adjacent_algebraic(sys: GridSystem) -> AdjacencyReport:
    """Decide adjacency of a (d+1)-grid system from the digit data.

    The far check uses the raw componentwise difference of initial points;
    integer parts cannot rescue a base-n-divisible denominator, so no mod-1
    reduction is applied.
    """
    if len(sys.grids) != sys.d + 1:
        raise ValueError(
            f"adjacency is defined for d+1 = {sys.d + 1} grids, got {len(sys.grids)}"
        )
    diagnostics = tuple(_pair_diagnostics(sys))
    failure = None
    for diag in diagnostics:
        if not diag.far:
            failure = Failure("far", pair=diag.pair, axis=diag.axis)
            break
    if failure is None:
        for diag in diagnostics:
            if not diag.limits_ok:
                failure = Failure("limits", pair=diag.pair, axis=diag.axis)
                break
    return AdjacencyReport(failure is None, diagnostics, failure, "algebraic")


def _project(rep: GridRepresentation, s: int) -> GridRepresentation:
    return GridRepresentation(rep.n, (rep.delta[s],), (rep.rows[s],))


def check_pair_1d(g1: GridRepresentation, g2: GridRepresentation) -> bool:
    """One-dimensional adjacency of two grids on the line."""
    if g1.d != 1 or g2.d != 1:
        raise ValueError("check_pair_1d expects one-dimensional representations")
    if g1.n != g2.n:
        raise ValueError("representations must share the base")
    far, _ = is_n_far(g1.delta[0] - g2.delta[0], g1.n)
    if not far:
        return False
    lo, hi = pair_limits(g1, g2, 0)
    return 0 < lo and hi < 1


def check_via_projections(sys: GridSystem) -> bool:
    """Adjacency via the axis projections: every pair of projected grids
    must be adjacent on the line, for every axis."""
    if len(sys.grids) != sys.d + 1:
        raise ValueError(
            f"adjacency is defined for d+1 = {sys.d + 1} grids, got {len(sys.grids)}"
        )
    return all(
        check_pair_1d(_project(r1, s), _project(r2, s))
        for s in range(sys.d)
        for r1, r2 in combinations(sys.grids, 2)
    )


def uniformness_check(
    r1: GridRepresentation,
    r2: GridRepresentation,
    s: int,
    shifts: tuple[tuple[int, ...], tuple[int, ...]],
) -> bool:
    """Re-representing either grid moves the limit pair (D1, D2) to itself
    or to its reflection (1 - D2, 1 - D1); check that on axis s."""
    d1, d2 = pair_limits(r1, r2, s)
    q1 = alternate_representation(r1, shifts[0])
    q2 = alternate_representation(r2, shifts[1])
    e1, e2 = pair_limits(q1, q2, s)
    return (e1, e2) == (d1, d2) or (e1, e2) == (1 - d2, 1 - d1)
