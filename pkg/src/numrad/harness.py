"""Random ensembles, whole-chain verification and reproduction of the
published worked examples."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .bounds import (
    BoundReport,
    OperatorProfile,
    make_report,
    hyponormal_bound,
    is_hyponormal,
    kittaneh_bound,
    shift_refined_bound,
    shift_refined_convex_bound,
    square_gap_bound,
    young_refined_bound,
)
from .config import DEFAULT_CONFIG, OptimizerConfig
from .errors import BadSpec

FAMILIES = ("ginibre", "normal", "hermitian", "upper_triangular", "jordan_shifted", "unitary")

# finite-dimensional hyponormal matrices are exactly the normal ones
FAMILY_ALIASES = {"hyponormal": "normal"}

ALPHAS = (0.25, 0.5, 0.75)
POWERS = (1.0, 2.0, 3.0)
RHOS = (0.0, 0.1, 0.25, 0.5)
BOUND_GROUPS = ("all", "kittaneh", "thm32", "thm25", "gap")


@dataclass(frozen=True)
class EnsembleSpec:
    family: str
    dim: int
    samples: int
    seed: int
    scale: float = 1.0

    def __post_init__(self):
        family = FAMILY_ALIASES.get(self.family, self.family)
        if family not in FAMILIES:
            raise BadSpec(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "family", family)
        if int(self.dim) != self.dim or self.dim < 2:
            raise BadSpec(f"dim must be an integer >= 2, got {self.dim!r}")
        if int(self.samples) != self.samples or self.samples < 1:
            raise BadSpec(f"samples must be a positive integer, got {self.samples!r}")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise BadSpec(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if not self.scale > 0:
            raise BadSpec(f"scale must be positive, got {self.scale!r}")

    def rng(self, index: int) -> np.random.Generator:
        """Independent PCG64 stream for sample ``index``."""
        ss = np.random.SeedSequence(int(self.seed), spawn_key=(int(index),))
        return np.random.Generator(np.random.PCG64(ss))


def _ginibre(rng, n, scale):
    return scale * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)


def _haar_unitary(rng, n):
    q, r = np.linalg.qr(_ginibre(rng, n, 1.0))
    d = np.diag(r)
    return q * (d / np.abs(d))


def sample_matrix(spec: EnsembleSpec, index: int) -> np.ndarray:
    rng = spec.rng(index)
    n, s = spec.dim, spec.scale
    fam = spec.family
    if fam == "ginibre":
        return _ginibre(rng, n, s)
    if fam == "hermitian":
        g = _ginibre(rng, n, s)
        return 0.5 * (g + g.conj().T)
    if fam == "upper_triangular":
        return np.triu(_ginibre(rng, n, s))
    if fam == "unitary":
        return _haar_unitary(rng, n)
    if fam == "normal":
        u = _haar_unitary(rng, n)
        d = s * (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / np.sqrt(2.0)
        return (u * d) @ u.conj().T
    # jordan_shifted
    c = complex(_ginibre(rng, 1, s)[0, 0])
    return c * np.eye(n) + s * np.eye(n, k=1)


def gen_ensemble(spec: EnsembleSpec) -> list[np.ndarray]:
    """All samples of ``spec``; sample ``i`` depends only on ``(spec, i)``."""
    return [sample_matrix(spec, i) for i in range(spec.samples)]


@dataclass
class ChainReport:
    matrix_id: str
    anchors: dict
    bounds: list[BoundReport] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "matrix_id": self.matrix_id,
            "anchors": dict(self.anchors),
            "bounds": [b.to_dict() for b in self.bounds],
            "violations": list(self.violations),
        }


def _wanted(groups, key):
    return "all" in groups or key in groups


def verify_chain(a, cfg: OptimizerConfig = DEFAULT_CONFIG, matrix_id: str = "A", groups=("all",)) -> ChainReport:
    """Evaluate the inequality chain ``|A|/2 <= w(A) <= |A|`` with every
    refined upper bound interleaved.

    ``groups`` selects bound families: ``kittaneh``, ``thm32`` (Young
    refinement over rho), ``thm25`` (shift refinement over alpha and r),
    ``gap`` (power inequality and the square-gap bound), or ``all``.
    """
    for g in groups:
        if g not in BOUND_GROUPS:
            raise ValueError(f"unknown bound group {g!r}")
    p = a if isinstance(a, OperatorProfile) else OperatorProfile(a, cfg)
    tol = p.cfg.bound_tol
    w, norm = p.radius, p.norm
    anchors = {"half_norm": 0.5 * norm, "radius": w, "norm": norm}
    bounds = [
        make_report("half_norm_below_radius", 0.5 * norm, w, tol),
        make_report("radius_below_norm", w, norm, tol),
    ]
    if _wanted(groups, "gap"):
        for k in (2, 3):
            bounds.append(make_report(f"power(n={k})", p.radius_of_power(k).value, w**k, tol, {"n": k}))
        center = complex(np.trace(p.a)) / p.n
        for lam0 in (0j, center, center + 1j):
            bounds.append(square_gap_bound(p, lam0))
    if _wanted(groups, "kittaneh"):
        bounds.append(kittaneh_bound(p))
    if _wanted(groups, "thm32"):
        bounds.extend(young_refined_bound(p, rho) for rho in RHOS)
    if _wanted(groups, "thm25"):
        bounds.extend(shift_refined_bound(p, al, r) for r in POWERS for al in ALPHAS)
        bounds.extend(shift_refined_convex_bound(p, al, r) for r in POWERS[1:] for al in ALPHAS)
    if "all" in groups and is_hyponormal(p.a):
        bounds.append(hyponormal_bound(p, 0.5))
    violations = [b.name for b in bounds if b.kind == "proven" and b.holds is False]
    return ChainReport(matrix_id, anchors, bounds, violations)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("NUMRAD_THREADS", "1")))
    except ValueError:
        return 1


def sweep(specs, cfg: OptimizerConfig = DEFAULT_CONFIG, threads: int | None = None) -> dict:
    """Verify the chain on every sample of every spec.

    Returns a summary keyed by bound name (count, holds count, minimum
    margin) plus a list of violations carrying their witness matrices.
    Results are reduced in sample order, so the report does not depend on
    the number of worker threads.
    """
    if isinstance(specs, EnsembleSpec):
        specs = [specs]
    jobs = [(spec, i) for spec in specs for i in range(spec.samples)]

    def run(job):
        spec, i = job
        a = sample_matrix(spec, i)
        return a, verify_chain(a, cfg, matrix_id=f"{spec.family}/{spec.dim}/{spec.seed}/{i}")

    workers = threads or _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(j) for j in jobs]

    summary: dict[str, dict] = {}
    violations = []
    for a, rep in results:
        for b in rep.bounds:
            s = summary.setdefault(b.name, {"count": 0, "holds": 0, "min_margin": float("inf")})
            s["count"] += 1
            s["holds"] += bool(b.holds)
            s["min_margin"] = min(s["min_margin"], b.margin)
        if rep.violations:
            violations.append({
                "matrix_id": rep.matrix_id,
                "bounds": rep.violations,
                "matrix": a,
            })
    return {
        "specs": [
            {"family": s.family, "dim": s.dim, "samples": s.samples, "seed": s.seed, "scale": s.scale}
            for s in specs
        ],
        "matrices": len(results),
        "summary": summary,
        "violations": violations,
    }


MATCH_TOL = 5e-3

EXAMPLE_ONE = np.array([[1.0, 0.5], [0.0, 1.0]])
EXAMPLE_TWO = np.array([[2.0, -1.0], [0.0, 3.0]])
EXAMPLE_THREE = np.array([[1.0, 1.0], [0.0, 2.0]])


def reproduce_examples(cfg: OptimizerConfig = DEFAULT_CONFIG) -> list[dict]:
    """Recompute every number quoted in the three worked examples.

    Each row carries the published figure, our value, their absolute
    difference and a MATCH/MISMATCH flag at 5e-3.
    """
    rows = []

    def add(example, quantity, published, value):
        diff = abs(value - published)
        rows.append({
            "example": example,
            "quantity": quantity,
            "quoted": published,
            "recomputed": float(value),
            "abs_diff": float(diff),
            "flag": "MATCH" if diff <= MATCH_TOL else "MISMATCH",
        })

    p = OperatorProfile(EXAMPLE_ONE, cfg)
    half = 0.5 * p.square_abs_sum_norm(0.5)
    shift = float(OperatorProfile(EXAMPLE_ONE - 0.5 * np.eye(2), cfg).norm)
    add("shift_sandwich", "w(A)^2", 1.5625, p.radius**2)
    add("shift_sandwich", "|A|^2", 3.2822, p.norm**2)
    add("shift_sandwich", "|A - 0.5 I|", 0.5201, shift)
    add("shift_sandwich", "(1/2)| |A^2| + |(A^2)*| |", 1.5652, half)
    add("shift_sandwich", "|A|^2 - (1/2)| |A^2| + |(A^2)*| |", 1.7170, p.norm**2 - half)
    add("shift_sandwich", "s_max", 1.3103, float(np.sqrt(max(p.norm**2 - half, 0.0))))

    p = OperatorProfile(EXAMPLE_TWO, cfg)
    w2 = p.radius_of_power(2).value
    shift = float(OperatorProfile(EXAMPLE_TWO - 2.5 * np.eye(2), cfg).norm)
    add("square_gap", "w(A^2)", 6.4142, w2)
    add("square_gap", "|A|^2", 10.6054, p.norm**2)
    add("square_gap", "|A - 2.5 I|", 0.955, shift)
    add("square_gap", "s_max", 2.0472, float(np.sqrt(max(p.norm**2 - w2, 0.0))))

    p = OperatorProfile(EXAMPLE_THREE, cfg)
    add("young_refined", "w(A)", 2.2071, p.radius)
    add("young_refined", "|A|", 2.2882, p.norm)
    add("young_refined", "(1/2)| |A| + |A*| |", 2.2518, 0.5 * p.abs_sum_norm)
    add("young_refined", "young bound (rho=0.1)", 2.2590, young_refined_bound(p, 0.1).rhs)
    return rows


def with_tolerance(cfg: OptimizerConfig, tol: float | None) -> OptimizerConfig:
    return cfg if tol is None else replace(cfg, bound_tol=tol)
