import random
from fractions import Fraction as Q

import pytest

from artifact import (
    DigitSequence,
    GridRepresentation,
    GridSystem,
    check_adjacent_algebraic,
    check_pair_1d,
    check_via_projections,
    pair_limits,
    uniformness_check,
)

from .conftest import degenerate_system, golden_system
from .oracles import random_rep

SYS5 = golden_system()
G1, G2, G3 = SYS5.grids


def test_pair_limits_goldens():
    assert pair_limits(G1, G2, 0) == (Q(1, 3), Q(1, 3))
    assert pair_limits(G1, G2, 1) == (Q(1, 3), Q(1, 3))
    assert pair_limits(G1, G3, 0) == (Q(1, 3), Q(2, 3))
    assert pair_limits(G2, G3, 0) == (Q(1, 3), Q(2, 3))


def test_pair_limits_symmetric():
    rng = random.Random(911)
    for _ in range(50):
        n = rng.choice([2, 3])
        r1, r2 = random_rep(rng, n, 2), random_rep(rng, n, 2)
        for s in range(2):
            assert pair_limits(r1, r2, s) == pair_limits(r2, r1, s)


def test_pair_limits_bounds():
    rng = random.Random(913)
    for _ in range(100):
        n = rng.choice([2, 3])
        r1, r2 = random_rep(rng, n, 1), random_rep(rng, n, 1)
        lo, hi = pair_limits(r1, r2, 0)
        assert 0 <= lo <= hi <= 1


def test_golden_system_adjacent():
    report = check_adjacent_algebraic(SYS5)
    assert report.verdict
    assert report.failure is None
    assert report.method == "algebraic"
    assert len(report.diagnostics) == 6
    for diag in report.diagnostics:
        assert diag.far
        assert diag.limits_ok


def test_golden_witness_constants():
    report = check_adjacent_algebraic(SYS5)
    by_pair = {(d.pair, d.axis): d for d in report.diagnostics}
    assert by_pair[((0, 1), 0)].witness_constant == Q(1, 3)
    assert by_pair[((0, 2), 0)].witness_constant == Q(1, 15)
    assert by_pair[((1, 2), 1)].witness_constant == Q(1, 15)


def test_degenerate_system_fails_far():
    report = check_adjacent_algebraic(degenerate_system())
    assert not report.verdict
    assert report.failure.condition == "far"
    assert report.failure.pair == (0, 1)
    assert report.failure.axis == 0


def test_limits_failure_when_matrices_shared():
    """Copying grid 1's digit rows onto grid 2 keeps farness but drives the
    pairwise limits to zero."""
    clone = GridRepresentation(2, G2.delta, G1.rows)
    report = check_adjacent_algebraic(GridSystem(2, 2, (G1, clone, G3)))
    assert not report.verdict
    assert report.failure.condition == "limits"
    assert report.failure.pair == (0, 1)
    diag = next(d for d in report.diagnostics if d.pair == (0, 1))
    assert diag.liminf == Q(0)


def test_wrong_arity_rejected():
    with pytest.raises(ValueError):
        check_adjacent_algebraic(GridSystem(2, 2, (G1, G2)))
    with pytest.raises(ValueError):
        check_via_projections(GridSystem(2, 2, (G1, G2, G3, G3)))


def test_check_pair_1d_golden():
    r1 = GridRepresentation(2, (Q(1, 3),), (DigitSequence(2, (), (1, 0)),))
    r2 = GridRepresentation(2, (Q(2, 3),), (DigitSequence(2, (), (0, 1)),))
    assert check_pair_1d(r1, r2)

    # anchor difference 7/12 - 1/3 = 1/4 is a dyadic rational, so not far
    near = GridRepresentation(2, (Q(7, 12),), (DigitSequence(2, (), (0, 1)),))
    assert not check_pair_1d(r1, near)


def test_projections_golden():
    assert check_via_projections(SYS5)
    assert not check_via_projections(degenerate_system())


def test_uniformness_golden():
    assert uniformness_check(G1, G2, 0, ((1, 1), (0, 0)))


def test_uniformness_random_shifts():
    rng = random.Random(5077)
    for _ in range(120):
        n = rng.choice([2, 3])
        d = rng.choice([1, 2])
        r1, r2 = random_rep(rng, n, d), random_rep(rng, n, d)
        s = rng.randrange(d)
        shifts = (
            tuple(rng.randrange(-3, 4) for _ in range(d)),
            tuple(rng.randrange(-3, 4) for _ in range(d)),
        )
        assert uniformness_check(r1, r2, s, shifts)
