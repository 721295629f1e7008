import random
from fractions import Fraction as Q

import pytest

from artifact import (
    CornerSet,
    DegenerateLatticeError,
    GridRepresentation,
    GridSystem,
    InconclusiveError,
    QueryCube,
    SmallScaleLattice,
    check_adjacent_algebraic,
    check_adjacent_geometric,
    dev,
    directional_dist,
    dist_boundary_to_lattice,
    dist_point_set,
    is_n_far_vector,
    is_separated,
    large_scale_sampling,
    modulated_corner_set,
    required_horizon,
    sampling_distance,
    sampling_deviation,
    small_scale_lattice_points,
)

from .conftest import degenerate_system, golden_system
from .oracles import (
    brute_boundary_dist,
    brute_lattice_points,
    brute_sampling_distance,
    random_separated_system,
)

SYS5 = golden_system()
G1, G2, G3 = SYS5.grids
D1, D2, D3 = G1.delta, G2.delta, G3.delta

UNIT_BOX = QueryCube((Q(0), Q(0)), Q(1))


def test_is_separated_goldens():
    assert is_separated((D1, D2, D3))
    assert not is_separated(((Q(0), Q(0)), (Q(0), Q(1, 3))))
    assert is_separated(((Q(1, 7), Q(2, 7)),))


def test_lattice_points_golden_eight():
    want = {
        (Q(1, 3), Q(2, 3)),
        (Q(2, 3), Q(1, 3)),
        (Q(1, 3), Q(1, 6)),
        (Q(5, 6), Q(1, 6)),
        (Q(1, 6), Q(1, 3)),
        (Q(1, 6), Q(5, 6)),
        (Q(5, 6), Q(2, 3)),
        (Q(2, 3), Q(5, 6)),
    }
    got = small_scale_lattice_points((D1, D2), 2, 1, UNIT_BOX)
    assert set(got) == want


def test_lattice_points_integer_line():
    got = small_scale_lattice_points(((Q(0),),), 2, 0, QueryCube((Q(0),), Q(3)))
    assert got == ((Q(0),), (Q(1),), (Q(2),))


def test_lattice_refinement():
    rng = random.Random(271)
    done = 0
    while done < 20:
        sys = random_separated_system(rng, rng.choice([2, 3]), 2, count=2)
        deltas = tuple(rep.delta for rep in sys.grids)
        m = rng.randrange(0, 3)
        try:
            coarse = set(small_scale_lattice_points(deltas, sys.n, m, UNIT_BOX))
            fine = set(small_scale_lattice_points(deltas, sys.n, m + 1, UNIT_BOX))
        except DegenerateLatticeError:
            # separated mod 1 does not rule out collisions mod n^-(m+1)
            continue
        assert coarse <= fine
        done += 1


def test_lattice_rejects_non_separated():
    with pytest.raises(DegenerateLatticeError):
        SmallScaleLattice(2, ((Q(0), Q(0)), (Q(0), Q(1, 3))), 1)


def test_lattice_rejects_scale_collision():
    # separated mod 1, but equal mod 1/2: the level-1 intersection has lines
    with pytest.raises(DegenerateLatticeError):
        SmallScaleLattice(2, ((Q(1, 3), Q(1, 3)), (Q(5, 6), Q(2, 3))), 1)


def test_lattice_points_match_brute_force():
    rng = random.Random(643)
    for _ in range(100):
        n = rng.choice([2, 3])
        d = rng.choice([1, 2, 3])
        m = rng.randrange(0, 2 if d == 3 else 4)
        while True:
            try:
                sys = random_separated_system(rng, n, d, count=d)
                deltas = tuple(rep.delta for rep in sys.grids)
                SmallScaleLattice(n, deltas, m)
                break
            except DegenerateLatticeError:
                continue
        box = QueryCube(tuple(Q(rng.randrange(-4, 4), 4) for _ in range(d)), Q(1))
        got = small_scale_lattice_points(deltas, n, m, box)
        want = brute_lattice_points(deltas, n, m, box.anchor, box.side)
        assert got == want


def test_boundary_to_lattice_golden():
    lattice = SmallScaleLattice(2, (D1, D2), 1)
    assert dist_boundary_to_lattice(D3, 1, lattice) == Q(1, 30)
    assert dist_boundary_to_lattice(G3, 1, lattice) == Q(1, 30)


def test_boundary_to_lattice_level_zero():
    # at scale 1 the nearest residue pair is 1/3 vs 1/5
    lattice = SmallScaleLattice(2, (D1, D2), 0)
    assert dist_boundary_to_lattice(D3, 0, lattice) == Q(2, 15)


def test_boundary_to_lattice_on_lattice_point():
    lattice = SmallScaleLattice(2, (D1, D2), 1)
    assert dist_boundary_to_lattice((Q(1, 3), Q(2, 3)), 1, lattice) == Q(0)


def test_boundary_to_lattice_matches_brute_force():
    rng = random.Random(911)
    for _ in range(40):
        n = rng.choice([2, 3])
        m = rng.randrange(0, 3)
        while True:
            try:
                sys = random_separated_system(rng, n, 2, count=2)
                deltas = tuple(rep.delta for rep in sys.grids)
                lattice = SmallScaleLattice(n, deltas, m)
                break
            except DegenerateLatticeError:
                continue
        probe = (Q(rng.randrange(0, 12), 12), Q(rng.randrange(0, 12), 12))
        got = dist_boundary_to_lattice(probe, m, lattice)
        assert got == brute_boundary_dist(probe, n, m, deltas)


def test_far_vector_golden():
    report = is_n_far_vector(D3, (D1, D2), 2)
    assert report.far
    assert report.witness_constant == Q(1, 15)
    assert all(x > 0 for x in report.scaled_distances)


def test_far_vector_own_anchor():
    report = is_n_far_vector(D1, (D1, D2), 2)
    assert not report.far
    assert all(x == 0 for x in report.scaled_distances)


def test_far_vector_adic_component():
    report = is_n_far_vector(
        (Q(3, 8), Q(1, 3)), ((Q(0), Q(0)), (Q(1, 3), Q(2, 3))), 2, scan_levels=12
    )
    assert not report.far
    assert report.witness_constant is None
    assert report.scaled_distances[-1] == Q(0)


def test_sampling_goldens():
    s12 = large_scale_sampling((G1, G2), 1)
    assert set(s12.points) == {(Q(2, 3), Q(4, 3)), (Q(4, 3), Q(2, 3))}
    s23 = large_scale_sampling((G2, G3), 1)
    assert set(s23.points) == {(Q(2, 3), Q(1, 5)), (Q(1, 5), Q(2, 3))}


def test_sampling_single_grid_1d():
    rep = GridRepresentation(2, (Q(1, 3),), (G1.rows[0],))
    s = large_scale_sampling((rep,), 3)
    assert s.points == (((Q(1, 3) + 5) % 8,),)


def test_sampling_points_reduce_lattice_translates():
    """A coarse lattice point reduced mod the window lands on a sampling
    point: the sampling is one fundamental cell of the level -j lattice."""
    rng = random.Random(353)
    for _ in range(100):
        n = rng.choice([2, 3])
        j = rng.randrange(1, 4)
        sys = random_separated_system(rng, n, 2, count=2)
        reps = tuple(sys.grids)
        sampling = large_scale_sampling(reps, j)
        window = n**j
        sigma = rng.sample(range(2), 2)
        point = []
        for s in range(2):
            rep = reps[sigma[s]]
            base = rep.delta[s] + rep.rows[s].partial_sum(j)
            point.append(base + rng.randrange(-3, 4) * window)
        reduced = tuple(c % window for c in point)
        assert reduced in sampling.points


def test_modulated_offset_goldens():
    assert modulated_corner_set(G1, 1).offsets == (Q(4, 3), Q(4, 3))
    assert modulated_corner_set(G2, 2).offsets == (Q(8, 3), Q(8, 3))
    for j in range(6):
        assert modulated_corner_set(G3, j).offsets == (Q(1, 5), Q(1, 5))


def test_modulated_offsets_are_reduced_corners():
    rng = random.Random(757)
    for _ in range(50):
        n = rng.choice([2, 3])
        sys = random_separated_system(rng, n, 2, count=1)
        rep = sys.grids[0]
        j = rng.randrange(0, 5)
        mcs = modulated_corner_set(rep, j)
        for s in range(2):
            corner = rep.delta[s] + rep.rows[s].partial_sum(j)
            assert mcs.offsets[s] == corner % (n**j)


PROBE_SET = CornerSet(2, (Q(1, 6), Q(1, 10)), 1)
PROBE_X = (Q(1, 2), Q(3, 10))


def test_directional_dist_golden():
    assert directional_dist(PROBE_SET, PROBE_X, 0) == Q(1, 3)
    assert directional_dist(PROBE_SET, PROBE_X, 1) == Q(1, 5)


def test_directional_dist_on_set():
    assert directional_dist(PROBE_SET, (Q(1, 6), Q(1, 4)), 0) == 0
    assert directional_dist(PROBE_SET, (Q(1, 6), Q(1, 4)), 1) == 0


def test_directional_dist_miss():
    # second coordinate above every facet extent: the axis-0 ray misses
    assert directional_dist(PROBE_SET, (Q(1, 2), Q(7, 10)), 0) is None


def test_dev_and_dist_golden():
    assert dev(PROBE_SET, PROBE_X) == Q(1, 3)
    assert dist_point_set(PROBE_SET, PROBE_X) == Q(1, 5)
    corner = PROBE_SET.corner
    assert dev(PROBE_SET, corner) == 0
    assert dist_point_set(PROBE_SET, corner) == 0


def test_dist_point_set_modulated():
    mcs = modulated_corner_set(G1, 1)
    assert mcs.offsets == (Q(4, 3), Q(4, 3))
    # the slice through y = 4/3 is the nearest piece
    assert dist_point_set(mcs, (Q(2, 3), Q(1, 5))) == Q(2, 3)
    # with the roles from the coarse cross computation, the gap is 7/15
    mcs2 = modulated_corner_set(G2, 1)
    assert mcs2.offsets == (Q(2, 3), Q(2, 3))
    assert dist_point_set(mcs2, (Q(4, 3), Q(1, 5))) == Q(7, 15)


def test_dev_dominates_dist():
    rng = random.Random(1301)
    for _ in range(200):
        n = rng.choice([2, 3])
        cs = CornerSet(
            n,
            (Q(rng.randrange(-6, 6), 6), Q(rng.randrange(-6, 6), 6)),
            rng.randrange(-1, 3),
        )
        x = (Q(rng.randrange(-12, 12), 8), Q(rng.randrange(-12, 12), 8))
        deviation = dev(cs, x)
        if deviation is None:
            continue
        assert deviation >= dist_point_set(cs, x)


def test_sampling_distance_golden_values():
    mcs = modulated_corner_set(G1, 1)
    samp = large_scale_sampling((G2, G3), 1)
    assert sampling_distance(mcs, samp) / 2 == Q(1, 3)

    mcs = modulated_corner_set(G2, 2)
    samp = large_scale_sampling((G1, G3), 2)
    assert sampling_distance(mcs, samp) / 4 == Q(1, 3)

    # the coarse cross value at j=1: the exact arithmetic gives 7/30
    mcs = modulated_corner_set(G2, 1)
    samp = large_scale_sampling((G1, G3), 1)
    assert sampling_distance(mcs, samp) / 2 == Q(7, 30)


def test_sampling_distance_matches_brute_force():
    rng = random.Random(587)
    for _ in range(60):
        n = rng.choice([2, 3])
        sys = random_separated_system(rng, n, 2)
        reps = tuple(sys.grids)
        j = rng.randrange(1, 4)
        mcs = modulated_corner_set(reps[0], j)
        samp = large_scale_sampling(reps[1:], j)
        got = sampling_distance(mcs, samp)
        assert got == brute_sampling_distance(mcs.offsets, n**j, samp.points)


def test_sampling_deviation_bounds():
    """Deviation of sampling points against a window slice stays inside
    one window: 0 <= dev < n^j."""
    rng = random.Random(1471)
    for _ in range(60):
        n = rng.choice([2, 3])
        sys = random_separated_system(rng, n, 2)
        reps = tuple(sys.grids)
        j = rng.randrange(1, 4)
        mcs = modulated_corner_set(reps[0], j)
        samp = large_scale_sampling(reps[1:], j)
        deviation = sampling_deviation(mcs, samp)
        assert 0 <= deviation < n**j


def test_geometric_golden_verdict():
    report = check_adjacent_geometric(SYS5)
    assert report.verdict
    assert report.method == "geometric"
    for diag in report.diagnostics:
        assert diag.far
        assert diag.liminf == Q(1, 3)
        assert diag.limsup == Q(2, 3)


def test_geometric_degenerate_fails_far():
    report = check_adjacent_geometric(degenerate_system())
    assert not report.verdict
    assert report.failure.condition == "far-vector"
    assert report.failure.grid == 0


def test_geometric_limits_failure():
    clone = GridRepresentation(2, G2.delta, G1.rows)
    report = check_adjacent_geometric(GridSystem(2, 2, (G1, clone, G3)))
    assert not report.verdict
    assert report.failure.condition == "limits"


def test_required_horizon_golden():
    assert required_horizon(SYS5) == 4


def test_inconclusive_below_horizon():
    with pytest.raises(InconclusiveError) as err:
        check_adjacent_geometric(SYS5, horizon=3)
    assert err.value.required == 4
    check_adjacent_geometric(SYS5, horizon=4)


def test_checker_equivalence_separated():
    rng = random.Random(8191)
    for _ in range(200):
        n = rng.choice([2, 3])
        d = rng.choice([1, 2])
        sys = random_separated_system(rng, n, d)
        assert check_adjacent_geometric(sys).verdict == check_adjacent_algebraic(sys).verdict
