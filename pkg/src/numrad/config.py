from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class OptimizerConfig:
    """Tolerances and iteration budgets for the numerical optimizers.

    The defaults are the ones every published number in this package was
    computed with; change them only for experiments.
    """

    # numerical radius: theta sweep + golden-section refinement
    radius_tol: float = 1e-8
    theta_samples: int = 720
    refine_peaks: int = 3
    refine_width: float = 1e-12

    # distance to scalars: coarse grid + Nelder-Mead
    shift_tol: float = 1e-6
    shift_grid: int = 9
    simplex_tol: float = 1e-8
    shift_max_iter: int = 2000
    shift_restarts: int = 4

    # zeta infimum over the unit sphere
    sphere_tol: float = 1e-6
    sphere_grid: int = 256
    sphere_starts: int = 64
    sphere_max_iter: int = 500
    sphere_seed: int = 0

    # margin tolerance for BoundReport.holds
    bound_tol: float = 1e-7


DEFAULT_CONFIG = OptimizerConfig()
