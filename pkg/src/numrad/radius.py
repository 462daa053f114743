"""Numerical radius.

``w(A) = max_theta lambda_max(H(theta))`` with
``H(theta) = (e^{i theta} A + e^{-i theta} A*) / 2``.  The maximum is located
on an equispaced theta grid and then polished by golden-section search
around the best few local maxima.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CONFIG, OptimizerConfig
from .errors import DomainError
from .linalg import as_matrix, hermitian_eig, lambda_max
from .optimize import golden_max

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RadiusResult:
    value: float
    argmax_theta: float
    witness: np.ndarray  # unit vector, first nonzero entry real positive


def _rotation_parts(a: np.ndarray):
    re = 0.5 * (a + a.conj().T)
    im = 0.5j * (a - a.conj().T)
    return re, im


def _canonical_phase(x: np.ndarray) -> np.ndarray:
    x = x / np.linalg.norm(x)
    big = np.flatnonzero(np.abs(x) > 1e-12)
    if big.size:
        z = x[big[0]]
        x = x * (abs(z) / z)
    return x


def support_values(a, thetas: np.ndarray) -> np.ndarray:
    """``lambda_max(H(theta))`` for every theta, vectorized over the grid."""
    re, im = _rotation_parts(as_matrix(a))
    c = np.cos(thetas)[:, None, None]
    s = np.sin(thetas)[:, None, None]
    # batched LAPACK is ~5x faster than a Python loop over the compiled Jacobi
    return np.linalg.eigvalsh(c * re + s * im)[:, -1]


def _local_peaks(values: np.ndarray, count: int) -> list[int]:
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    peaks = np.flatnonzero((values >= left) & (values >= right))
    order = np.argsort(-values[peaks], kind="stable")
    return [int(i) for i in peaks[order[:count]]]


def numerical_radius(a, cfg: OptimizerConfig = DEFAULT_CONFIG) -> RadiusResult:
    """Numerical radius of ``a`` with a phase-canonical maximizing unit vector."""
    a = as_matrix(a)
    re, im = _rotation_parts(a)
    m = cfg.theta_samples
    step = TWO_PI / m
    grid = np.arange(m) * step
    values = support_values(a, grid)

    def f(theta: float) -> float:
        return lambda_max(math.cos(theta) * re + math.sin(theta) * im)

    peaks = _local_peaks(values, cfg.refine_peaks)
    candidates = [(float(values[k]), float(grid[k])) for k in peaks]
    for k in peaks:
        theta, val = golden_max(f, grid[k] - step, grid[k] + step, cfg.refine_width)
        candidates.append((val, theta % TWO_PI))

    best = max(v for v, _ in candidates)
    tie = 1e-12 * max(1.0, abs(best))
    theta_star = min(t for v, t in candidates if v >= best - tie)

    h = math.cos(theta_star) * re + math.sin(theta_star) * im
    witness = _canonical_phase(hermitian_eig(h, check=False).eigenvectors[:, -1])
    return RadiusResult(value=max(best, 0.0), argmax_theta=theta_star, witness=witness)


def triangular2x2_radius(a1: complex, a2: complex, b: complex) -> float:
    """Closed-form numerical radius of ``[[a1, b], [0, a2]]`` (or its transpose)."""
    return 0.5 * abs(a1 + a2) + 0.5 * math.sqrt(abs(a1 - a2) ** 2 + abs(b) ** 2)


def power_gap(a, n: int, cfg: OptimizerConfig = DEFAULT_CONFIG) -> float:
    """``w(A)**n - w(A**n)``; nonnegative by the power inequality."""
    if int(n) != n or n < 1:
        raise DomainError(f"power must be a positive integer, got {n!r}")
    if n == 1:
        return 0.0
    a = as_matrix(a)
    w = numerical_radius(a, cfg).value
    return w**n - numerical_radius(np.linalg.matrix_power(a, int(n)), cfg).value
