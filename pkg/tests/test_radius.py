import math

import numpy as np
import pytest

from numrad.errors import DomainError
from numrad.linalg import operator_norm
from numrad.radius import numerical_radius, power_gap, triangular2x2_radius

from oracles import brute_radius_2x2, random_complex, random_normal_matrix


@pytest.mark.parametrize(
    "a, expected",
    [
        ([[1, 0.5], [0, 1]], 1.25),
        (np.eye(3), 1.0),
        ([[2, -1], [0, 3]], 2.5 + math.sqrt(2) / 2),
        ([[0, 1], [0, 0]], 0.5),
        (np.zeros((2, 2)), 0.0),
    ],
)
def test_numerical_radius_examples(a, expected):
    assert numerical_radius(a).value == pytest.approx(expected, abs=1e-10)


def test_example_square_of_radius():
    assert numerical_radius([[1, 0.5], [0, 1]]).value ** 2 == pytest.approx(1.5625, abs=1e-10)


def test_against_brute_force_sphere(rng):
    for _ in range(10):
        a = random_complex(rng, (2, 2))
        assert numerical_radius(a).value == pytest.approx(brute_radius_2x2(a), abs=5e-6)


def test_witness_is_unit_and_attains_value(rng):
    for _ in range(100):
        n = int(rng.integers(1, 8))
        a = random_complex(rng, (n, n))
        res = numerical_radius(a)
        x = res.witness
        assert abs(np.linalg.norm(x) - 1.0) <= 1e-12
        assert abs(np.vdot(x, a @ x)) >= res.value - 1e-8
        assert 0.0 <= res.argmax_theta < 2 * math.pi
        first = x[np.flatnonzero(np.abs(x) > 1e-12)[0]]
        assert first.imag == pytest.approx(0.0, abs=1e-15) and first.real > 0


def test_argmax_theta_smallest_on_ties():
    # identity: lambda_max(H(theta)) = cos(theta), maximized only at 0
    assert numerical_radius(np.eye(2)).argmax_theta == pytest.approx(0.0, abs=1e-9)
    # -I: maximized at pi; a smooth peak fixes theta only to ~sqrt(eps)
    assert numerical_radius(-np.eye(2)).argmax_theta == pytest.approx(math.pi, abs=1e-5)


def test_triangular_closed_form_examples():
    assert triangular2x2_radius(1, 2, 1) == pytest.approx(2.2071, abs=1e-4)
    assert triangular2x2_radius(2 - 1j, 2 - 1j, 0) == pytest.approx(abs(2 - 1j))
    assert triangular2x2_radius(1, 1, 1) == pytest.approx(1.5)


def test_sweep_matches_closed_form_when_diagonal_collinear(rng):
    for _ in range(200):
        phase = np.exp(2j * math.pi * rng.random())
        a1, a2 = rng.standard_normal(2) * phase
        b = complex(*rng.standard_normal(2))
        for a in ([[a1, b], [0, a2]], [[a1, 0], [b, a2]]):
            assert abs(numerical_radius(a).value - triangular2x2_radius(a1, a2, b)) <= 1e-8


def test_closed_form_is_upper_bound_for_generic_complex_diagonal(rng):
    gaps = []
    for _ in range(200):
        a1, a2, b = random_complex(rng, 3)
        w = numerical_radius([[a1, b], [0, a2]]).value
        gaps.append(triangular2x2_radius(a1, a2, b) - w)
    assert min(gaps) >= -1e-8
    assert max(gaps) > 1e-3  # strictly loose in general


def test_sandwich_and_normal_equality(rng):
    for _ in range(200):
        n = int(rng.integers(2, 8))
        a = random_complex(rng, (n, n))
        w = numerical_radius(a).value
        nrm = operator_norm(a)
        assert 0.5 * nrm - 1e-8 <= w <= nrm + 1e-8
        m, _ = random_normal_matrix(rng, n)
        assert abs(numerical_radius(m).value - operator_norm(m)) <= 1e-8


def test_scaling(rng):
    for _ in range(50):
        n = int(rng.integers(2, 6))
        a = random_complex(rng, (n, n))
        c = complex(*rng.standard_normal(2))
        assert numerical_radius(c * a).value == pytest.approx(abs(c) * numerical_radius(a).value, abs=1e-10)


def test_power_gap_examples():
    assert power_gap([[2, -1], [0, 3]], 2) == pytest.approx(0.25, abs=1e-9)
    assert power_gap([[0, 1], [0, 0]], 2) == pytest.approx(0.25, abs=1e-12)
    assert power_gap(np.diag([1.0, 2j, -3.0]), 3) == pytest.approx(0.0, abs=1e-8)
    assert power_gap([[1, 5], [0, 2]], 1) == 0.0
    with pytest.raises(DomainError):
        power_gap(np.eye(2), 0)


def test_power_inequality(rng):
    for _ in range(100):
        n = int(rng.integers(2, 7))
        a = random_complex(rng, (n, n))
        for k in (2, 3):
            assert power_gap(a, k) >= -1e-8
