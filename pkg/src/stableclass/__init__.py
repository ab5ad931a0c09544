"""Stable classes of highly connected manifolds: exact arithmetic, enumeration and a CLI."""

from __future__ import annotations

from .errors import (
    BoundaryNotStandardSphere,
    FactorizationIncomplete,
    HypothesisViolation,
    InvalidArgument,
    NotCharacteristic,
    NotCharacteristicSquare,
    StableClassError,
)
from .exactmath import (
    BigRat,
    CoprimeSplitting,
    Factorization,
    bernoulli_paper,
    coprime_splittings,
    divisors,
    factorial_divides,
    factorize,
    is_prime,
)
from .forms import (
    ExtSymForm,
    antiisometries_hyperbolic,
    canonical_pair,
    isometry_group_hyperbolic,
    oriented_equivalent,
    orbit_count_pairs_bruteforce,
    orbit_count_pairs_formula,
    unoriented_equivalent,
)
from .jdata import bp8_order, c_factor, dimension_data, hopf_stabilization_check, j_order, prime_set_j, q_m
from .manifolds import (
    FourKManifold,
    StableClassReport,
    WallManifold,
    almost_diffeomorphic,
    enumerate_stable_class,
    homotopy_equivalent,
    homotopy_family,
    homotopy_upper_bound,
    n4k_enumerate_stable_class,
    n4k_homotopy_equivalent,
    n4k_stably_diffeomorphic,
    n4k_witness_family,
    stably_almost_diffeomorphic,
    wall_from_ab,
    wall_invariants,
)
from .spinc import BordismClass, SpinCClass, bordism_invariant, census, chern_action, c1_square

__version__ = "0.1.0"
