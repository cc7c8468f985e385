"""Exact wall-and-chamber computations for Beauville-Mukai systems ``M(0,n,-1)``
on K3 surfaces of Picard rank one and degree ``2d``."""

from .lattice import (
    IDENTITY,
    IsometryMatrix,
    MukaiVector,
    apply,
    bm_vector,
    dual,
    hilbert_vector,
    is_isotropic,
    is_primitive,
    is_spherical,
    moduli_dim,
    pairing,
    phi,
    phi_inverse,
    primitive_part,
    square,
    twist,
    vec,
)
from .plane import (
    CentralCharge,
    PlanePoint,
    Semicircle,
    central_charge,
    crossing_t,
    gamma_from_vector,
    gamma_from_vector_bm,
    gamma_zero,
    is_geometric_guaranteed,
    semicircle,
)
from .walls import (
    IncompleteCatalogWarning,
    LatticeBasis,
    RankUndeterminedError,
    TssWitness,
    Wall,
    all_walls,
    alg_m,
    alg_s,
    brill_noether_wall,
    flopping_check,
    flopping_check_bm,
    is_totally_semistable,
    lattice_basis,
    lattice_collisions,
    make_wall,
    merge_walls,
    oracle_walls,
    rank_bound,
    rank_one_catalog_bm,
    rank_one_catalog_hilbert,
    wall_rank,
)
from .chain import (
    ChainReport,
    ExcLocus,
    FlopStep,
    Model,
    MovableConeRay,
    build_chain,
    chambers,
    crossing_parameter,
    decomposition_at_crossing,
    exceptional_locus,
    movable_cone_rays,
    n1_report,
)

__version__ = "0.1.0"
