"""Evaluators for refined upper bounds on the numerical radius.

Every evaluator returns a :class:`BoundReport`.  Bounds that are theorems
report ``kind="proven"`` and their ``holds`` flag is expected to be true;
conditional results check their hypotheses first and say so when they fail,
and claims whose derivation is not watertight are marked ``"empirical"``.

The evaluators accept either a matrix or an :class:`OperatorProfile`, which
caches the spectral data of one matrix so that a battery of bounds does not
recompute ``w(A)``, ``|A|``, the distance to scalars, and so on.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.optimize import minimize

from .config import DEFAULT_CONFIG, OptimizerConfig
from .errors import (
    DomainError,
    NoConvergence,
    NotHermitian,
    NotHyponormal,
    NotPD,
    NotUnit,
    PremiseFailed,
    PremiseUndefined,
    RatioUndefined,
    ZeroMatrix,
)
from .linalg import (
    as_matrix,
    cogram,
    eigvalsh,
    gram,
    hermitian_eig,
    lambda_max,
    min_eig_hermitian,
    operator_norm,
    power_from_eig,
)
from .optimize import golden_min
from .radius import RadiusResult, numerical_radius
from .scalar import kantorovich_constant

UNIT_TOL = 1e-10
RATIO_GUARD = 1e-14


@dataclass(frozen=True)
class ShiftResult:
    lambda_star: complex
    distance: float


@dataclass
class BoundReport:
    """One evaluated inequality ``lhs <= rhs``.

    ``side_margins`` holds the margins of auxiliary inequalities that are
    part of the same statement (e.g. ``rhs <= |A|``); ``premises`` holds the
    margins of hypotheses, nonnegative when satisfied.  ``holds`` is None
    when a premise fails, because no claim is made then.
    """

    name: str
    lhs: float
    rhs: float
    margin: float
    holds: bool | None
    params: dict = field(default_factory=dict)
    kind: str = "proven"
    side_margins: dict = field(default_factory=dict)
    premises: dict = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "holds": self.holds,
            "kind": self.kind,
            "params": dict(self.params),
            "side_margins": dict(self.side_margins),
            "premises": dict(self.premises),
            "note": self.note,
        }


def make_report(name, lhs, rhs, tol, params=None, kind="proven", side=None, premises=None, note=""):
    params = dict(params or {})
    params["tol"] = tol
    side = dict(side or {})
    premises = dict(premises or {})
    lhs, rhs = float(lhs), float(rhs)
    margin = rhs - lhs
    if any(v < -tol for v in premises.values()):
        holds = None
        kind = "premise_failed"
    else:
        holds = bool(margin >= -tol and all(v >= -tol for v in side.values()))
    return BoundReport(name, lhs, rhs, margin, holds, params, kind, side, premises, note)


def _shift_norm(a: np.ndarray, lam: complex) -> float:
    n = a.shape[0]
    return operator_norm(a - lam * np.eye(n))


def distance_to_scalars(a, cfg: OptimizerConfig = DEFAULT_CONFIG) -> ShiftResult:
    """``inf_lam |A - lam I|`` and a minimizing ``lam``.

    The objective is convex in ``lam``.  A coarse grid over the disc of
    radius ``|A - (tr A / n) I|`` around ``tr A / n`` picks the start for a
    Nelder-Mead descent, which is restarted from its own answer until it
    stops improving.
    """
    a = as_matrix(a)
    n = a.shape[0]
    center = complex(np.trace(a)) / n
    d0 = _shift_norm(a, center)
    if d0 == 0.0:
        return ShiftResult(center, 0.0)

    eye = np.eye(n)

    def f(v):
        return math.sqrt(max(lambda_max(gram(a - complex(v[0], v[1]) * eye)), 0.0))

    k = cfg.shift_grid
    offsets = np.linspace(-d0, d0, k)
    best_v, best_f = np.array([center.real, center.imag]), d0
    for dx in offsets:
        for dy in offsets:
            if dx * dx + dy * dy > d0 * d0:
                continue
            v = np.array([center.real + dx, center.imag + dy])
            fv = f(v)
            if fv < best_f:
                best_v, best_f = v, fv

    size = 2.0 * d0 / (k - 1)
    for _ in range(cfg.shift_restarts + 1):
        simplex = np.array([best_v, best_v + [size, 0.0], best_v + [0.0, size]])
        res = minimize(
            f,
            best_v,
            method="Nelder-Mead",
            options={
                "initial_simplex": simplex,
                "xatol": cfg.simplex_tol,
                "fatol": np.inf,
                "maxiter": cfg.shift_max_iter,
            },
        )
        if res.nit >= cfg.shift_max_iter:
            raise NoConvergence("Nelder-Mead hit its iteration cap")
        improved = best_f - res.fun
        if res.fun < best_f:
            best_v, best_f = res.x, float(res.fun)
        if improved <= 1e-13 * max(1.0, d0):
            break
        size = max(size * 0.1, 100 * cfg.simplex_tol)
    return ShiftResult(complex(best_v[0], best_v[1]), float(best_f))


class OperatorProfile:
    """Lazily computed spectral data of one matrix."""

    def __init__(self, a, cfg: OptimizerConfig = DEFAULT_CONFIG):
        self.a = as_matrix(a)
        self.cfg = cfg
        self.n = self.a.shape[0]
        self._radii: dict[int, RadiusResult] = {}

    @cached_property
    def adj(self) -> np.ndarray:
        return self.a.conj().T

    @cached_property
    def norm(self) -> float:
        return operator_norm(self.a)

    def radius_of_power(self, k: int) -> RadiusResult:
        if k not in self._radii:
            self._radii[k] = numerical_radius(np.linalg.matrix_power(self.a, k), self.cfg)
        return self._radii[k]

    @property
    def radius(self) -> float:
        return self.radius_of_power(1).value

    @cached_property
    def square(self) -> np.ndarray:
        return self.a @ self.a

    @cached_property
    def abs_eig(self):
        return hermitian_eig(gram(self.a))

    @cached_property
    def abs_adj_eig(self):
        return hermitian_eig(cogram(self.a))

    @cached_property
    def abs(self) -> np.ndarray:
        return power_from_eig(self.abs_eig, 0.5)

    @cached_property
    def abs_adj(self) -> np.ndarray:
        return power_from_eig(self.abs_adj_eig, 0.5)

    @cached_property
    def abs_sum_norm(self) -> float:
        """``| |A| + |A*| |``."""
        return lambda_max(self.abs + self.abs_adj)

    @cached_property
    def _square_eigs(self):
        return hermitian_eig(gram(self.square)), hermitian_eig(cogram(self.square))

    def square_abs_sum_norm(self, alpha: float = 0.5) -> float:
        """``| |A^2|^(2 alpha) + |(A^2)*|^(2 - 2 alpha) |``."""
        e, e_adj = self._square_eigs
        return lambda_max(power_from_eig(e, alpha) + power_from_eig(e_adj, 1.0 - alpha))

    @cached_property
    def shift(self) -> ShiftResult:
        return distance_to_scalars(self.a, self.cfg)


def profile(a, cfg: OptimizerConfig = DEFAULT_CONFIG) -> OperatorProfile:
    if isinstance(a, OperatorProfile):
        return a
    return OperatorProfile(a, cfg)


def is_hyponormal(a, tol: float = 1e-10) -> bool:
    """``A*A - AA* >= 0`` up to ``tol`` (scaled by ``max(1, |A|^2)``)."""
    a = as_matrix(a)
    comm = gram(a) - cogram(a)
    scale = max(1.0, float(np.max(np.abs(a))) ** 2 * a.shape[0])
    return min_eig_hermitian(comm) >= -tol * scale


def _shift_refined_parts(a, alpha, power_r, cfg):
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if power_r < 1.0:
        raise DomainError(f"power_r must be >= 1, got {power_r}")
    p = profile(a, cfg)
    d = p.shift.distance
    params = {"alpha": alpha, "power_r": power_r, "shift": p.shift.lambda_star, "distance": d}
    return p, p.square_abs_sum_norm(alpha), d, params


def shift_refined_bound(a, alpha: float = 0.5, power_r: float = 1.0, cfg: OptimizerConfig = DEFAULT_CONFIG) -> BoundReport:
    """``w^(2r) <= 2^-r ( N^r + 2^r d^(2r) )`` with ``N = | |A^2|^(2a) + |(A^2)*|^(2-2a) |``.

    ``d`` is the distance from ``A`` to the scalar matrices; the weights
    correspond to ``f(t) = t^alpha``, ``g(t) = t^(1 - alpha)``.

    Only ``r = 1`` is established: for ``r > 1`` the power-mean step behind
    this form loses a factor ``2^(1 - 1/r)``, and ``A = [[1, 1], [0, 2]]``
    with ``alpha = 1/2, r = 3`` violates it.  Such reports are marked
    ``"empirical"``; :func:`shift_refined_convex_bound` is the sound
    version.
    """
    p, big_n, d, params = _shift_refined_parts(a, alpha, power_r, cfg)
    r = power_r
    lhs = p.radius ** (2 * r)
    rhs = (big_n**r + 2.0**r * d ** (2 * r)) / 2.0**r
    rep = make_report(f"shift_refined(alpha={alpha:g},r={r:g})", lhs, rhs, p.cfg.bound_tol, params)
    if r != 1.0:
        rep.kind = "empirical"
        rep.note = "not implied for r > 1"
    return rep


def shift_refined_convex_bound(a, alpha: float = 0.5, power_r: float = 1.0, cfg: OptimizerConfig = DEFAULT_CONFIG) -> BoundReport:
    """``w^(2r) <= (N^r + 2^r d^(2r)) / 2``.

    The ``r = 1`` case raised to the power ``r`` and split with the
    convexity of ``t^r``; agrees with :func:`shift_refined_bound` at ``r = 1``.
    """
    p, big_n, d, params = _shift_refined_parts(a, alpha, power_r, cfg)
    r = power_r
    lhs = p.radius ** (2 * r)
    rhs = (big_n**r + 2.0**r * d ** (2 * r)) / 2.0
    return make_report(f"shift_refined_convex(alpha={alpha:g},r={r:g})", lhs, rhs, p.cfg.bound_tol, params)


def shift_sandwich_check(a, lambda0: complex, s: float, cfg: OptimizerConfig = DEFAULT_CONFIG) -> BoundReport:
    """Sandwich ``w(A) <= sqrt(N + s^2) <= |A|`` with ``N = (1/2) | |A^2| + |(A^2)*| |``.

    Claimed when ``|A - lambda0 I| <= s <= sqrt(|A|^2 - N)``.  Both premise
    margins are reported; if either is negative the report carries no claim.
    """
    if not s > 0:
        raise DomainError(f"s must be positive, got {s}")
    p = profile(a, cfg)
    half = 0.5 * p.square_abs_sum_norm(0.5)
    radicand = p.norm**2 - half
    if radicand < -p.cfg.bound_tol:
        raise PremiseUndefined(f"|A|^2 - N = {radicand:.6g} < 0")
    s_max = math.sqrt(max(radicand, 0.0))
    shift = _shift_norm(p.a, lambda0)
    middle = math.sqrt(half + s * s)
    premises = {"shift_within_s": s - shift, "s_within_limit": s_max - s}
    params = {"lambda0": complex(lambda0), "s": s, "s_max": s_max, "shift_norm": shift, "norm": p.norm}
    return make_report(
        "shift_sandwich", p.radius, middle, p.cfg.bound_tol, params,
        side={"middle_below_norm": p.norm - middle}, premises=premises,
    )


def square_gap_bound(a, lambda0: complex | None = None, cfg: OptimizerConfig = DEFAULT_CONFIG) -> BoundReport:
    """``w(A)^2 - w(A^2) <= |A - lambda0 I| |A* - lambda0 I|`` for every ``lambda0``."""
    p = profile(a, cfg)
    if lambda0 is None:
        lambda0 = complex(np.trace(p.a)) / p.n
    lhs = p.radius**2 - p.radius_of_power(2).value
    rhs = _shift_norm(p.a, lambda0) * _shift_norm(p.adj, lambda0)
    return make_report("square_gap", lhs, rhs, p.cfg.bound_tol, {"lambda0": complex(lambda0)})


def _unit(z, name="z") -> np.ndarray:
    z = np.asarray(z, dtype=np.complex128)
    nz = float(np.linalg.norm(z))
    if abs(nz - 1.0) > UNIT_TOL:
        raise NotUnit(f"|{name}| = {nz!r}, expected 1")
    return z


def _within(value: float, limit: float, label: str) -> float:
    margin = limit - value
    if margin < -1e-12 * max(1.0, limit):
        raise PremiseFailed(f"{label}: {value:.12g} exceeds {limit:.12g}")
    return margin


def vector_product_bound(x, y, z, lam: complex, mu: complex, a: float, b: float, power_r: float = 1.0, tol: float = 1e-7) -> BoundReport:
    """``(|<x,z>||<y,z>| - |<x,y>|)^r <= (a^(2r) + b^(2r)) / 2``.

    Requires a unit ``z`` with ``|x - lam z| <= a`` and ``|y - mu z| <= b``.
    A negative bracket makes the claim trivial; it is then reported with
    ``lhs = 0`` and a note.
    """
    if not (a > 0 and b > 0):
        raise DomainError("a and b must be positive")
    if power_r < 1.0:
        raise DomainError(f"power_r must be >= 1, got {power_r}")
    z = _unit(z)
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    premises = {
        "x_near_z": _within(float(np.linalg.norm(x - lam * z)), a, "|x - lam z| <= a"),
        "y_near_z": _within(float(np.linalg.norm(y - mu * z)), b, "|y - mu z| <= b"),
    }
    bracket = abs(np.vdot(z, x)) * abs(np.vdot(z, y)) - abs(np.vdot(y, x))
    note = ""
    if bracket < 0:
        lhs, note = 0.0, "bracket negative"
    else:
        lhs = bracket**power_r
    rhs = (a ** (2 * power_r) + b ** (2 * power_r)) / 2.0
    params = {"lam": complex(lam), "mu": complex(mu), "a": a, "b": b, "power_r": power_r}
    return make_report("vector_product", lhs, rhs, tol, params, premises=premises, note=note)


def hermitian_companion_claim(a, b_mat, a_rad: float, b_rad: float, power_r: float, lam: complex, mu: complex, cfg: OptimizerConfig = DEFAULT_CONFIG) -> BoundReport:
    """``w(A)^r <= (a^(2r) + b^(2r)) / 2 * |B|^-r`` for Hermitian ``B``.

    Stated under ``|A - lam I| <= a`` and ``|B - mu I| <= b``.  Its
    derivation needs ``Az`` orthogonal to ``Bz``, which does not hold in
    general, so the result is only reported (``kind="empirical"``).
    """
    p = profile(a, cfg)
    bm = as_matrix(b_mat)
    if np.max(np.abs(bm - bm.conj().T)) > 1e-12 * max(1.0, float(np.max(np.abs(bm)))):
        raise NotHermitian("B must be Hermitian")
    b_norm = operator_norm(bm)
    if b_norm == 0.0:
        raise ZeroMatrix("B must be nonzero")
    premises = {
        "a_near_scalar": _within(_shift_norm(p.a, lam), a_rad, "|A - lam I| <= a"),
        "b_near_scalar": _within(_shift_norm(bm, mu), b_rad, "|B - mu I| <= b"),
    }
    r = power_r
    lhs = p.radius**r
    rhs = (a_rad ** (2 * r) + b_rad ** (2 * r)) / 2.0 * b_norm ** (-r)
    params = {"a": a_rad, "b": b_rad, "power_r": r, "lam": complex(lam), "mu": complex(mu), "b_norm": b_norm}
    rep = make_report("hermitian_companion", lhs, rhs, p.cfg.bound_tol, params, premises=premises)
    rep.kind = "empirical"
    return rep


def kantorovich_functional_check(a, z, lam: complex, mu: complex, a_rad: float, b_rad: float, tol: float = 1e-7) -> BoundReport:
    """``<Az,z><A^-1 z,z> - 1 <= (a^2 + b^2) / 2`` for positive definite ``A``.

    Requires ``|Az - lam z| <= a`` and ``|A^-1 z - mu z| <= b``.
    """
    m = as_matrix(a)
    eig = hermitian_eig(m)
    if eig.eigenvalues[0] <= 0:
        raise NotPD(f"smallest eigenvalue {eig.eigenvalues[0]:.3e}")
    v, w = eig.eigenvectors, eig.eigenvalues
    inv = (v / w) @ v.conj().T
    z = _unit(z)
    az, iz = m @ z, inv @ z
    premises = {
        "az_near_z": _within(float(np.linalg.norm(az - lam * z)), a_rad, "|Az - lam z| <= a"),
        "inv_near_z": _within(float(np.linalg.norm(iz - mu * z)), b_rad, "|A^-1 z - mu z| <= b"),
    }
    k = (np.vdot(z, az) * np.vdot(z, iz)).real
    params = {"lam": complex(lam), "mu": complex(mu), "a": a_rad, "b": b_rad, "functional": k}
    return make_report("kantorovich_functional", k - 1.0, (a_rad**2 + b_rad**2) / 2.0, tol, params, premises=premises)


def kittaneh_bound(a, cfg: OptimizerConfig = DEFAULT_CONFIG) -> BoundReport:
    """``w(A) <= (1/2) | |A| + |A*| |``, which never exceeds ``|A|``."""
    p = profile(a, cfg)
    rhs = 0.5 * p.abs_sum_norm
    return make_report("kittaneh", p.radius, rhs, p.cfg.bound_tol, side={"rhs_below_norm": p.norm - rhs})


def young_refined_bound(a, lam: float, cfg: OptimizerConfig = DEFAULT_CONFIG) -> BoundReport:
    """``w(A) <= (1 - 2 rho)/2 | |A| + |A*| | + 2 rho |A|``, ``rho = min(lam, 1 - lam)``.

    ``rho = 0`` gives the Kittaneh bound and ``rho = 1/2`` gives ``|A|``.
    """
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"lam must lie in [0, 1], got {lam}")
    p = profile(a, cfg)
    rho = min(lam, 1.0 - lam)
    rhs = (1.0 - 2.0 * rho) / 2.0 * p.abs_sum_norm + 2.0 * rho * p.norm
    return make_report(
        f"young_refined(rho={rho:g})", p.radius, rhs, p.cfg.bound_tol, {"lam": lam, "rho": rho},
        side={"rhs_below_norm": p.norm - rhs},
    )


def _zeta_terms(p_mat, q_mat, xs: np.ndarray):
    px = xs @ p_mat.T
    qx = xs @ q_mat.T
    pv = np.einsum("ij,ij->i", xs.conj(), px).real
    qv = np.einsum("ij,ij->i", xs.conj(), qx).real
    return pv, qv, px, qx


def _zeta_values(pv, qv, rho):
    with np.errstate(divide="ignore", invalid="ignore"):
        h = pv / qv
        k = (h + 1.0) ** 2 / (4.0 * h)
        out = np.power(k, rho)
    return np.where((qv > RATIO_GUARD) & (pv >= 0), out, np.inf)


def zeta_at(a, x, lam: float) -> float:
    """``K(<|A|x,x> / <|A*|x,x>, 2) ** rho`` at a unit vector ``x``."""
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"lam must lie in [0, 1], got {lam}")
    p = profile(a)
    x = _unit(x, "x")
    num = float(np.vdot(x, p.abs @ x).real)
    den = float(np.vdot(x, p.abs_adj @ x).real)
    if den <= RATIO_GUARD:
        raise RatioUndefined(f"<|A*|x, x> = {den:.3e}")
    rho = min(lam, 1.0 - lam)
    if rho == 0.0:
        return 1.0
    if num <= 0.0:
        return math.inf
    return kantorovich_constant(num / den) ** rho


def zeta_gradient(a, x, lam: float) -> np.ndarray:
    """Riemannian gradient of ``zeta`` on the unit sphere at ``x``.

    Represented as a complex vector ``g`` so that the directional
    derivative along a tangent ``dx`` is ``Re <dx, g>``.
    """
    p = profile(a)
    x = _unit(x, "x")
    rho = min(lam, 1.0 - lam)
    pv, qv, px, qx = _zeta_terms(p.abs, p.abs_adj, x[None, :])
    return _sphere_gradient(x[None, :], pv, qv, px, qx, rho)[0]


def _sphere_gradient(xs, pv, qv, px, qx, rho):
    h = pv / qv
    zeta = np.power((h + 1.0) ** 2 / (4.0 * h), rho)
    dz_dh = rho * zeta * (h - 1.0) / (h * (h + 1.0))
    grad_h = 2.0 * (px * qv[:, None] - qx * pv[:, None]) / (qv**2)[:, None]
    g = dz_dh[:, None] * grad_h
    radial = np.einsum("ij,ij->i", xs.conj(), g).real
    return g - radial[:, None] * xs


def _zeta_inf_2d(pm, qm, rho, cfg):
    m = cfg.sphere_grid
    ts = np.linspace(0.0, 0.5 * math.pi, m)
    ps = np.linspace(0.0, 2.0 * math.pi, m, endpoint=False)
    tt, pp = np.meshgrid(ts, ps, indexing="ij")
    xs = np.stack([np.cos(tt).ravel() + 0j, np.exp(1j * pp.ravel()) * np.sin(tt).ravel()], axis=1)
    pv, qv, _, _ = _zeta_terms(pm, qm, xs)
    vals = _zeta_values(pv, qv, rho)
    k = int(np.argmin(vals))
    best = float(vals[k])
    if not np.isfinite(best):
        raise RatioUndefined("every sphere probe hit the ratio guard")
    t, phi = float(tt.ravel()[k]), float(pp.ravel()[k])
    dt, dphi = ts[1] - ts[0], ps[1] - ps[0]

    def f(t_, phi_):
        x = np.array([[math.cos(t_), np.exp(1j * phi_) * math.sin(t_)]])
        pv_, qv_, _, _ = _zeta_terms(pm, qm, x)
        return float(_zeta_values(pv_, qv_, rho)[0])

    for _ in range(4):
        if best - 1.0 <= 1e-12:
            break
        t, best = golden_min(lambda s: f(s, phi), t - dt, t + dt, 1e-12)
        phi, best = golden_min(lambda s: f(t, s), phi - dphi, phi + dphi, 1e-12)
        dt *= 0.5
        dphi *= 0.5
    return best


def _zeta_inf_sphere(pm, qm, rho, cfg):
    n = pm.shape[0]
    rng = np.random.default_rng(cfg.sphere_seed)
    xs = rng.standard_normal((cfg.sphere_starts, n)) + 1j * rng.standard_normal((cfg.sphere_starts, n))
    xs /= np.linalg.norm(xs, axis=1, keepdims=True)
    pv, qv, px, qx = _zeta_terms(pm, qm, xs)
    vals = _zeta_values(pv, qv, rho)
    live = np.isfinite(vals)
    if not live.any():
        raise RatioUndefined("every sphere probe hit the ratio guard")
    xs, vals = xs[live], vals[live]
    pv, qv, px, qx = pv[live], qv[live], px[live], qx[live]
    step = np.ones(len(xs))
    for _ in range(cfg.sphere_max_iter):
        if vals.min() - 1.0 <= 1e-12:
            break
        g = _sphere_gradient(xs, pv, qv, px, qx, rho)
        gn2 = np.einsum("ij,ij->i", g.conj(), g).real
        if gn2.max() < 1e-30:
            break
        trial = xs - step[:, None] * g
        trial /= np.linalg.norm(trial, axis=1, keepdims=True)
        tpv, tqv, tpx, tqx = _zeta_terms(pm, qm, trial)
        tvals = _zeta_values(tpv, tqv, rho)
        ok = tvals <= vals - 1e-4 * step * gn2
        xs[ok], vals[ok] = trial[ok], tvals[ok]
        pv[ok], qv[ok], px[ok], qx[ok] = tpv[ok], tqv[ok], tpx[ok], tqx[ok]
        step = np.where(ok, step * 2.0, step * 0.5)
    return float(vals.min())


def zeta_inf(a, lam: float, cfg: OptimizerConfig = DEFAULT_CONFIG) -> float:
    """Infimum of :func:`zeta_at` over the unit sphere.

    Dimension 2 is searched exhaustively on a ``(t, phi)`` grid for
    ``x = (cos t, e^{i phi} sin t)`` and polished by coordinate golden
    sections; higher dimensions use projected gradient descent from random
    unit starts.  Since ``K >= 1``, the search stops early once a probe is
    within 1e-12 of 1.
    """
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"lam must lie in [0, 1], got {lam}")
    rho = min(lam, 1.0 - lam)
    if rho == 0.0:
        return 1.0
    p = profile(a, cfg)
    if p.n == 1:
        if p.norm <= RATIO_GUARD:
            raise RatioUndefined("zero 1x1 matrix")
        return 1.0
    if p.n == 2:
        return _zeta_inf_2d(p.abs, p.abs_adj, rho, p.cfg)
    return _zeta_inf_sphere(p.abs, p.abs_adj, rho, p.cfg)


def hyponormal_bound(a, lam: float, cfg: OptimizerConfig = DEFAULT_CONFIG, hypo_tol: float = 1e-10) -> BoundReport:
    """``w(A) <= | |A| + |A*| | / (2 inf zeta)`` for hyponormal ``A``."""
    p = profile(a, cfg)
    if not is_hyponormal(p.a, hypo_tol):
        raise NotHyponormal("A*A - AA* is not positive semidefinite")
    zi = zeta_inf(p, lam, cfg)
    rhs = 0.5 * p.abs_sum_norm / zi
    return make_report("hyponormal_zeta", p.radius, rhs, p.cfg.bound_tol, {"lam": lam, "zeta_inf": zi})
