"""Adjacent n-adic grid systems: exact checkers, cover queries, witnesses."""

from .algebraic import (
    AdjacencyReport,
    Failure,
    PairDiagnostics,
    check_adjacent_algebraic,
    check_pair_1d,
    check_via_projections,
    pair_limits,
    uniformness_check,
)
from .cover import (
    CoverResult,
    EstimateResult,
    ScaleEstimate,
    WitnessCube,
    cover_query,
    estimate_cover_constant,
    verification_budget,
    witness_nonadjacent,
)
from .digits import (
    DigitSequence,
    SignedDigitSequence,
    base_n_expansion,
    is_n_far,
    periodic_limit_points,
    phase_limits,
    tie_length,
)
from .geometry import (
    CornerSet,
    DegenerateLatticeError,
    FarVectorReport,
    GridDiagnostics,
    InconclusiveError,
    LargeScaleSampling,
    ModulatedCornerSet,
    SmallScaleLattice,
    check_adjacent_geometric,
    dev,
    directional_dist,
    dist_boundary_to_lattice,
    dist_point_set,
    dist_point_set_squared,
    is_n_far_vector,
    is_separated,
    large_scale_sampling,
    modulated_corner_set,
    required_horizon,
    sampling_deviation,
    sampling_distance,
    small_scale_lattice_points,
)
from .grids import (
    GridCube,
    GridRepresentation,
    GridSystem,
    QueryCube,
    alternate_representation,
    contains,
    cube_containing,
    generation_offset,
    generation_scale,
    grids_equal,
    location,
)
from .rationals import (
    circular_gap,
    floor_log,
    format_point,
    format_rational,
    frac_part,
    parse_rational,
)
from .serialize import (
    InputError,
    load_system,
    parse_cube,
    parse_system,
    report_to_dict,
    system_to_dict,
)

__all__ = [
    "AdjacencyReport",
    "CornerSet",
    "CoverResult",
    "DegenerateLatticeError",
    "DigitSequence",
    "EstimateResult",
    "Failure",
    "FarVectorReport",
    "GridCube",
    "GridDiagnostics",
    "GridRepresentation",
    "GridSystem",
    "InconclusiveError",
    "InputError",
    "LargeScaleSampling",
    "ModulatedCornerSet",
    "PairDiagnostics",
    "QueryCube",
    "ScaleEstimate",
    "SignedDigitSequence",
    "SmallScaleLattice",
    "WitnessCube",
    "alternate_representation",
    "base_n_expansion",
    "check_adjacent_algebraic",
    "check_adjacent_geometric",
    "check_pair_1d",
    "check_via_projections",
    "circular_gap",
    "contains",
    "cover_query",
    "cube_containing",
    "dev",
    "directional_dist",
    "dist_boundary_to_lattice",
    "dist_point_set",
    "dist_point_set_squared",
    "estimate_cover_constant",
    "floor_log",
    "format_point",
    "format_rational",
    "frac_part",
    "generation_offset",
    "generation_scale",
    "grids_equal",
    "is_n_far",
    "is_n_far_vector",
    "is_separated",
    "large_scale_sampling",
    "load_system",
    "location",
    "modulated_corner_set",
    "pair_limits",
    "parse_cube",
    "parse_rational",
    "parse_system",
    "periodic_limit_points",
    "phase_limits",
    "report_to_dict",
    "required_horizon",
    "sampling_deviation",
    "sampling_distance",
    "small_scale_lattice_points",
    "system_to_dict",
    "tie_length",
    "uniformness_check",
    "verification_budget",
    "witness_nonadjacent",
]
