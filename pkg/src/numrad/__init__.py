"""Numerical radius, operator norm and refined numerical-radius bounds for
dense complex matrices."""

from .bounds import (
    BoundReport,
    OperatorProfile,
    ShiftResult,
    distance_to_scalars,
    hermitian_companion_claim,
    hyponormal_bound,
    is_hyponormal,
    kantorovich_functional_check,
    kittaneh_bound,
    shift_refined_bound,
    shift_refined_convex_bound,
    shift_sandwich_check,
    square_gap_bound,
    vector_product_bound,
    young_refined_bound,
    zeta_at,
    zeta_inf,
)
from .config import DEFAULT_CONFIG, OptimizerConfig
from .harness import ChainReport, EnsembleSpec, gen_ensemble, reproduce_examples, sweep, verify_chain
from .linalg import HermitianEig, hermitian_eig, matrix_abs, min_eig_hermitian, operator_norm, psd_power
from .radius import RadiusResult, numerical_radius, power_gap, triangular2x2_radius
from .scalar import (
    AngleTriple,
    YoungWeights,
    angles,
    kantorovich_constant,
    kantorovich_young,
    kittaneh_young,
    krein_triangle_check,
    min_shift_distance_vec,
    power_sum_check,
    schwarz_product_check,
    young_chain,
)

__version__ = "0.1.0"
