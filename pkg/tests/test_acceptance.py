"""One test per acceptance criterion; each prints a PASS/FAIL line in the
"acceptance criteria" section of the pytest summary."""
import math
import time

import numpy as np
import pytest

from numrad.bounds import (
    OperatorProfile,
    distance_to_scalars,
    square_gap_bound,
    young_refined_bound,
    zeta_at,
    zeta_inf,
)
from numrad.cli import main
from numrad.harness import FAMILIES, EnsembleSpec, reproduce_examples, sweep
from numrad.radius import numerical_radius, triangular2x2_radius
from numrad.scalar import (
    AngleTriple,
    YoungWeights,
    angles,
    cos_psi_by_phase,
    kantorovich_young,
    kittaneh_young,
    krein_triangle_check,
    min_shift_distance_vec,
    power_sum_check,
    young_chain,
)

from conftest import ACCEPTANCE_LINES
from oracles import enclosing_disc, grid_shift_distance_2x2, random_complex, random_normal_matrix, random_unit

MATCH = 5e-3


def record(num, label, ok, detail, elapsed):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {num}. {label}: {detail} ({elapsed:.2f}s)")


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def _repro_rows():
    return {(r["example"], r["quantity"]): r for r in reproduce_examples()}


def test_criterion_1_young_example():
    with Timer() as t:
        p = OperatorProfile([[1, 1], [0, 2]])
        got = {
            "w": (p.radius, 2.2071),
            "norm": (p.norm, 2.2882),
            "kittaneh": (0.5 * p.abs_sum_norm, 2.2518),
            "young(rho=0.1)": (young_refined_bound(p, 0.1).rhs, 2.2590),
        }
    close = all(abs(v - ref) <= MATCH for v, ref in got.values())
    chain = got["w"][0] <= got["young(rho=0.1)"][0] <= got["norm"][0]
    ok = close and chain and t.elapsed < 1.0
    detail = ", ".join(f"{k}={v:.6f}" for k, (v, _) in got.items()) + f", chain={'ok' if chain else 'broken'}"
    record(1, "A=[[1,1],[0,2]] values and chain", ok, detail, t.elapsed)
    assert close and chain
    assert t.elapsed < 1.0


def test_criterion_2_shift_sandwich_example():
    with Timer() as t:
        rows = _repro_rows()
    want = {
        "w(A)^2": "MATCH",
        "(1/2)| |A^2| + |(A^2)*| |": "MATCH",
        "|A|^2": "MISMATCH",
        "|A - 0.5 I|": "MISMATCH",
    }
    got = {q: rows["shift_sandwich", q] for q in want}
    ok = all(got[q]["flag"] == f for q, f in want.items())
    ok = ok and abs(got["|A|^2"]["recomputed"] - 1.6404) <= 1e-4
    ok = ok and abs(got["|A - 0.5 I|"]["recomputed"] - 0.8090) <= 1e-4
    detail = ", ".join(f"{q}: {r['recomputed']:.4f} vs {r['quoted']} {r['flag']}" for q, r in got.items())
    record(2, "A=[[1,0.5],[0,1]] partial reproduction", ok and t.elapsed < 1.0, detail, t.elapsed)
    assert ok and t.elapsed < 1.0


def test_criterion_3_square_gap_example():
    with Timer() as t:
        rows = _repro_rows()
        gap = square_gap_bound([[2, -1], [0, 3]], 2.5)
    want = {"|A|^2": "MATCH", "w(A^2)": "MISMATCH", "|A - 2.5 I|": "MISMATCH"}
    got = {q: rows["square_gap", q] for q in want}
    ok = all(got[q]["flag"] == f for q, f in want.items())
    ok = ok and abs(got["w(A^2)"]["recomputed"] - 10.0355) <= 1e-4
    ok = ok and abs(got["|A - 2.5 I|"]["recomputed"] - 1.2071) <= 1e-4
    ok = ok and gap.holds and abs(gap.lhs - 0.25) <= 1e-6 and abs(gap.rhs - 1.4571) <= 1e-4
    detail = ", ".join(f"{q}: {r['recomputed']:.4f} vs {r['quoted']} {r['flag']}" for q, r in got.items())
    detail += f", gap {gap.lhs:.4f} <= {gap.rhs:.4f}"
    record(3, "A=[[2,-1],[0,3]] partial reproduction", ok and t.elapsed < 1.0, detail, t.elapsed)
    assert ok and t.elapsed < 1.0


SUITE = {
    "norm sandwich": ("half_norm_below_radius", "radius_below_norm"),
    "power inequality n=2,3": ("power(n=2)", "power(n=3)"),
    "kittaneh": ("kittaneh",),
    "shift_refined r=1": tuple(f"shift_refined(alpha={a:g},r=1)" for a in (0.25, 0.5, 0.75)),
    "shift_refined r=2": tuple(f"shift_refined(alpha={a:g},r=2)" for a in (0.25, 0.5, 0.75)),
    "shift_refined r=3": tuple(f"shift_refined(alpha={a:g},r=3)" for a in (0.25, 0.5, 0.75)),
    "square_gap (3 shifts)": ("square_gap",),
    "young_refined (4 rho)": tuple(f"young_refined(rho={r:g})" for r in (0, 0.1, 0.25, 0.5)),
}
INFO = {
    "shift_refined_convex r=2,3": tuple(
        f"shift_refined_convex(alpha={a:g},r={r})" for r in (2, 3) for a in (0.25, 0.5, 0.75)
    ),
}


@pytest.mark.slow
def test_criterion_4_proven_bound_suite():
    specs = [EnsembleSpec(f, d, 239, 20240611) for f in FAMILIES for d in range(2, 9)]
    with Timer() as t:
        report = sweep(specs, threads=1)
    summary = report["summary"]

    def tally(names):
        count = sum(summary[n]["count"] for n in names)
        bad = sum(summary[n]["count"] - summary[n]["holds"] for n in names)
        worst = min(summary[n]["min_margin"] for n in names)
        return count, bad, worst

    total_bad = 0
    for label, names in SUITE.items():
        count, bad, worst = tally(names)
        total_bad += bad
        record("4", f"  {label}", bad == 0, f"{count} checks, {bad} violations, min margin {worst:.3e}", 0.0)
    for label, names in INFO.items():
        count, bad, worst = tally(names)
        record("4", f"  (not in criterion) {label}", bad == 0, f"{count} checks, {bad} violations, min margin {worst:.3e}", 0.0)
    ok = total_bad == 0 and t.elapsed < 300
    record(4, "proven-bound suite", ok, f"{report['matrices']} matrices, {total_bad} violations", t.elapsed)
    assert report["matrices"] >= 10_000
    assert t.elapsed < 300
    assert total_bad == 0, f"{total_bad} violations; see the acceptance summary"


def test_criterion_5_radius_vs_closed_form():
    rng = np.random.default_rng(5)
    worst = 0.0
    with Timer() as t:
        for _ in range(1000):
            # the closed form is exact when a1, a2 lie on a common line through 0
            phase = np.exp(2j * math.pi * rng.random())
            a1, a2 = rng.standard_normal(2) * phase
            b = complex(*rng.standard_normal(2))
            w = numerical_radius([[a1, b], [0, a2]]).value
            worst = max(worst, abs(w - triangular2x2_radius(a1, a2, b)))
    ok = worst <= 1e-8 and t.elapsed < 10
    record(5, "radius sweep vs 2x2 triangular closed form", ok, f"1000 instances, max diff {worst:.2e}", t.elapsed)
    assert worst <= 1e-8
    assert t.elapsed < 10


def test_criterion_6_distance_oracles():
    rng = np.random.default_rng(6)
    worst_disc = worst_grid = 0.0
    with Timer() as t:
        for _ in range(200):
            n = int(rng.integers(2, 7))
            m, eigs = random_normal_matrix(rng, n)
            worst_disc = max(worst_disc, abs(distance_to_scalars(m).distance - enclosing_disc(eigs)[0]))
        for _ in range(200):
            a = random_complex(rng, (2, 2))
            worst_grid = max(worst_grid, abs(distance_to_scalars(a).distance - grid_shift_distance_2x2(a)))
    ok = worst_disc <= 1e-5 and worst_grid <= 1e-4 and t.elapsed < 60
    record(6, "distance to scalars vs oracles", ok, f"disc max diff {worst_disc:.2e}, grid max diff {worst_grid:.2e}", t.elapsed)
    assert worst_disc <= 1e-5 and worst_grid <= 1e-4
    assert t.elapsed < 60


def test_criterion_7_zeta_flatness():
    rng = np.random.default_rng(7)
    lo, hi, pmin = math.inf, -math.inf, math.inf
    with Timer() as t:
        profiles = []
        for _ in range(1000):
            n = int(rng.integers(2, 7))
            p = OperatorProfile(random_complex(rng, (n, n)))
            profiles.append(p)
            for lam in (0.1, 0.3, 0.5):
                z = zeta_inf(p, lam)
                lo, hi = min(lo, z), max(hi, z)
        for i in range(10_000):
            p = profiles[i % len(profiles)]
            pmin = min(pmin, zeta_at(p, random_unit(rng, p.n), rng.random()))
    ok = 1 - 1e-4 <= lo and hi <= 1 + 1e-4 and pmin >= 1 - 1e-12 and t.elapsed < 60
    record(7, "zeta infimum is 1", ok, f"zeta_inf in [{lo:.12f}, {hi:.12f}], min zeta_at {pmin:.15f}", t.elapsed)
    assert 1 - 1e-4 <= lo and hi <= 1 + 1e-4
    assert pmin >= 1 - 1e-12
    assert t.elapsed < 60


def test_criterion_8_scalar_and_vector_lemmas():
    rng = np.random.default_rng(8)
    grid_ab = [k / 10 for k in range(101)]
    failures = {}

    def fail(key):
        failures[key] = failures.get(key, 0) + 1

    with Timer() as t:
        for lam in [k / 10 for k in range(11)]:
            w1 = YoungWeights(lam)
            ws = [YoungWeights(lam, r) for r in (1.0, 1.5, 2.0, 3.0)]
            for a in grid_ab:
                for b in grid_ab:
                    for w in ws:
                        geo, arith, pm = young_chain(a, b, w)
                        if not geo <= arith + 1e-12 or not arith <= pm + 1e-12:
                            fail("young chain")
                    lhs, rhs = kittaneh_young(a, b, w1)
                    if lhs > rhs + 1e-12:
                        fail("additive Young")
                    if a > 0 and b > 0:
                        lhs, rhs = kantorovich_young(a, b, w1)
                        if lhs < rhs - 1e-12:
                            fail("multiplicative Young")
        for r in (1.0, 1.5, 2.0, 3.0):
            for a in grid_ab:
                for b in grid_ab:
                    lhs, rhs = power_sum_check(a, b, r)
                    if lhs > rhs * (1 + 1e-14) + 1e-12:
                        fail("power sum")
        for _ in range(1000):
            n = int(rng.integers(1, 5))
            x, y = random_complex(rng, n), random_unit(rng, n)
            lam, d = min_shift_distance_vec(x, y)
            probes = lam + random_complex(rng, 100)
            vals = np.linalg.norm(x[None] - probes[:, None] * y[None], axis=1) ** 2
            if vals.min() < d - 1e-12 or abs(np.linalg.norm(x - lam * y) ** 2 - d) > 1e-12:
                fail("projection minimum")
        worst_krein = math.inf
        for _ in range(10_000):
            n = int(rng.integers(1, 5))
            tri = AngleTriple(*(random_complex(rng, n) for _ in range(3)))
            phi, psi = krein_triangle_check(tri)
            worst_krein = min(worst_krein, phi, psi)
            if min(phi, psi) < -1e-10:
                fail("Krein")
            if abs(cos_psi_by_phase(tri.x, tri.y) - angles(tri.x, tri.y)[1]) > 1e-8:
                fail("psi as best phase")
    ok = not failures and t.elapsed < 30
    detail = "all grids hold" if not failures else f"failures {failures}"
    record(8, "scalar and vector lemmas", ok, f"{detail}, worst Krein defect {worst_krein:.2e}", t.elapsed)
    assert not failures
    assert t.elapsed < 30


def test_criterion_9_sweep_determinism(tmp_path, capsys):
    args = ["sweep", "--family", "upper_triangular", "--dim", "2..4", "--samples", "10", "--seed", "99"]
    outs = [tmp_path / "first.json", tmp_path / "second.json"]
    with Timer() as t:
        codes = [main(args + ["--output", str(o)]) for o in outs]
    same = outs[0].read_bytes() == outs[1].read_bytes()
    ok = same and codes[0] == codes[1]
    record(9, "repeated sweep is byte-identical", ok, f"{outs[0].stat().st_size} bytes, exit codes {codes}", t.elapsed)
    assert ok
