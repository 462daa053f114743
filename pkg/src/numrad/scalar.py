"""Scalar and vector inequalities: Young refinements, the Kantorovich
constant, Krein angles and the Schwarz product inequality.

Two different exponents appear in this family of results and they are kept
apart: ``power_r >= 1`` is a power-mean exponent, ``rho = min(lam, 1 - lam)``
is the weight of a Young remainder term.

Inner products are linear in the first argument: ``<x, y> = sum x_i conj(y_i)``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotUnit, ZeroVector
from .optimize import golden_max


@dataclass(frozen=True)
class YoungWeights:
    lam: float
    power_r: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.lam <= 1.0:
            raise DomainError(f"lam must lie in [0, 1], got {self.lam}")
        if self.power_r < 1.0:
            raise DomainError(f"power_r must be >= 1, got {self.power_r}")

    @property
    def rho(self) -> float:
        return min(self.lam, 1.0 - self.lam)


@dataclass(frozen=True)
class AngleTriple:
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray

    def __post_init__(self):
        vecs = [np.asarray(v, dtype=np.complex128) for v in (self.x, self.y, self.z)]
        if len({v.shape for v in vecs}) != 1 or vecs[0].ndim != 1:
            raise ValueError("x, y, z must be vectors of equal length")
        for name, v in zip("xyz", vecs):
            _require_nonzero(v, name)
            object.__setattr__(self, name, v)


def inner(x, y) -> complex:
    return complex(np.vdot(y, x))


def _require_nonzero(v: np.ndarray, name: str = "vector") -> float:
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise ZeroVector(f"{name} is the zero vector")
    return n


def _nonneg(*values: float) -> None:
    for v in values:
        if v < 0:
            raise DomainError(f"expected a nonnegative number, got {v}")


def young_chain(a: float, b: float, w: YoungWeights) -> tuple[float, float, float]:
    """Geometric mean <= arithmetic mean <= power mean, all with weight ``lam`` on ``a``.

    Uses ``0 ** 0 == 1``.
    """
    _nonneg(a, b)
    lam, r = w.lam, w.power_r
    geo = a**lam * b ** (1.0 - lam)
    arith = lam * a + (1.0 - lam) * b
    power_mean = (lam * a**r + (1.0 - lam) * b**r) ** (1.0 / r)
    return geo, arith, power_mean


def power_sum_check(a: float, b: float, power_r: float) -> tuple[float, float]:
    """``((a + b)**r, 2**(r-1) * (a**r + b**r))``; first never exceeds second."""
    _nonneg(a, b)
    if power_r < 1.0:
        raise DomainError(f"power_r must be >= 1, got {power_r}")
    return (a + b) ** power_r, 2.0 ** (power_r - 1.0) * (a**power_r + b**power_r)


def kittaneh_young(a: float, b: float, w: YoungWeights) -> tuple[float, float]:
    """Additive Young refinement: ``a^lam b^(1-lam) + rho (sqrt a - sqrt b)^2 <= lam a + (1-lam) b``."""
    _nonneg(a, b)
    lam = w.lam
    lhs = a**lam * b ** (1.0 - lam) + w.rho * (math.sqrt(a) - math.sqrt(b)) ** 2
    return lhs, lam * a + (1.0 - lam) * b


def kantorovich_constant(h: float) -> float:
    """``K(h, 2) = (h + 1)^2 / (4 h)``."""
    if not h > 0:
        raise DomainError(f"Kantorovich constant needs h > 0, got {h}")
    return (h + 1.0) ** 2 / (4.0 * h)


def kantorovich_young(a: float, b: float, w: YoungWeights) -> tuple[float, float]:
    """Multiplicative Young refinement with ``h = b / a``.

    Returns ``((1-lam) a + lam b, K(h)^rho a^(1-lam) b^lam)``; the first
    dominates.
    """
    if not (a > 0 and b > 0):
        raise DomainError("a and b must be positive")
    lam = w.lam
    lhs = (1.0 - lam) * a + lam * b
    rhs = kantorovich_constant(b / a) ** w.rho * a ** (1.0 - lam) * b**lam
    return lhs, rhs


def angles(x, y) -> tuple[float, float]:
    """``(cos phi, cos psi)``: real-part and modulus angle cosines, clamped to [-1, 1]."""
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    denom = _require_nonzero(x, "x") * _require_nonzero(y, "y")
    ip = inner(x, y)
    cos_phi = min(1.0, max(-1.0, ip.real / denom))
    cos_psi = min(1.0, abs(ip) / denom)
    return cos_phi, cos_psi


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


# Chord formulas |x - y| = 2 sin(phi / 2) for unit x, y: acos loses about
# sqrt(eps) for nearly parallel vectors, the chord does not.
def _phi(x, y) -> float:
    return 2.0 * math.asin(min(1.0, 0.5 * float(np.linalg.norm(_unit(x) - _unit(y)))))


def _psi(x, y) -> float:
    ip = inner(x, y)
    u = ip / abs(ip) if abs(ip) > 0 else 1.0
    return 2.0 * math.asin(min(1.0, 0.5 * float(np.linalg.norm(_unit(x) - u * _unit(y)))))


def krein_triangle_check(t: AngleTriple) -> tuple[float, float]:
    """Defects of the two Krein triangle inequalities (both >= 0).

    ``phi_xy + phi_yz - phi_xz`` and ``psi_xz + psi_yz - psi_xy``.
    """
    x, y, z = t.x, t.y, t.z
    phi_defect = _phi(x, y) + _phi(y, z) - _phi(x, z)
    psi_defect = _psi(x, z) + _psi(y, z) - _psi(x, y)
    return phi_defect, psi_defect


def schwarz_product_check(t: AngleTriple) -> tuple[float, float]:
    """``|<x,z>||<y,z>|`` against ``|<x,y>| |z|^2 + sqrt(gx) sqrt(gy)``.

    ``gx = |x|^2 |z|^2 - |<x,z>|^2`` and likewise for ``y``.
    """
    x, y, z = t.x, t.y, t.z
    nx2, ny2, nz2 = (float(np.vdot(v, v).real) for v in (x, y, z))
    xz, yz, xy = abs(inner(x, z)), abs(inner(y, z)), abs(inner(x, y))
    gx = max(nx2 * nz2 - xz**2, 0.0)
    gy = max(ny2 * nz2 - yz**2, 0.0)
    return xz * yz, xy * nz2 + math.sqrt(gx) * math.sqrt(gy)


def min_shift_distance_vec(x, y) -> tuple[complex, float]:
    """Minimize ``|x - lam y|^2`` over complex ``lam`` for a unit vector ``y``.

    The minimizer is the projection coefficient ``<x, y>`` and the minimum
    is ``|x|^2 - |<x, y>|^2``.
    """
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    ny = float(np.linalg.norm(y))
    if abs(ny - 1.0) > 1e-12:
        raise NotUnit(f"|y| = {ny!r}, expected 1")
    lam = inner(x, y)
    min_sq = float(np.vdot(x, x).real) - abs(lam) ** 2
    return lam, max(min_sq, 0.0)


def cos_psi_by_phase(x, y, samples: int = 360, refine: bool = True) -> float:
    """``cos psi_{x,y}`` recovered as the best ``cos phi_{e^{it} x, y}`` over phases ``t``.

    Grid of ``samples`` phases, then golden-section polishing around the
    best grid phase when ``refine`` is set.
    """
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    denom = _require_nonzero(x, "x") * _require_nonzero(y, "y")
    ip = inner(x, y)

    # <e^{it} x, y> = e^{it} <x, y>, so one inner product serves every phase
    def cos_phi(t: float) -> float:
        return min(1.0, max(-1.0, (cmath.exp(1j * t) * ip).real / denom))

    step = 2.0 * math.pi / samples
    grid = np.clip((np.exp(1j * step * np.arange(samples)) * ip).real / denom, -1.0, 1.0)
    k = int(np.argmax(grid))
    vals = grid.tolist()
    if not refine:
        return vals[k]
    _, best = golden_max(cos_phi, (k - 1) * step, (k + 1) * step, 1e-12)
    return max(best, vals[k])
