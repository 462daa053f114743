"""Dense complex matrix kernels.

Everything spectral in the package goes through :func:`hermitian_eig`, a
cyclic Jacobi solver for complex Hermitian matrices compiled with numba.
Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``;
:func:`as_matrix` is the single validation point.
"""
from __future__ import annotations

from typing import NamedTuple

import numba as nb
import numpy as np

from .errors import InvalidMatrix, NoConvergence, NotHermitian, NotPSD

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
HERMITIAN_TOL = 1e-12
PSD_CLAMP = 1e-10


class HermitianEig(NamedTuple):
    eigenvalues: np.ndarray  # ascending, real
    eigenvectors: np.ndarray  # column j pairs with eigenvalue j


def as_matrix(a) -> np.ndarray:
    """Validate ``a`` as a finite square complex matrix and return a copy."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise InvalidMatrix(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidMatrix("matrix has non-finite entries")
    return m


def adjoint(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def hermitian_part(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + a.conj().T)


def gram(a: np.ndarray) -> np.ndarray:
    """``A* A``, symmetrized to absorb matmul rounding."""
    return hermitian_part(a.conj().T @ a)


def cogram(a: np.ndarray) -> np.ndarray:
    """``A A*``, symmetrized."""
    return hermitian_part(a @ a.conj().T)


@nb.njit(cache=True, nogil=True)
def _jacobi(h, want_vectors, tol, max_sweeps):
    # Cyclic Jacobi. Each rotation first removes the phase of a[p, q] with a
    # diagonal unitary, then applies the real symmetric Jacobi rotation.
    n = h.shape[0]
    a = h.copy()
    v = np.eye(n, dtype=np.complex128)
    scale = 0.0
    for i in range(n):
        for j in range(n):
            scale += a[i, j].real ** 2 + a[i, j].imag ** 2
    thresh = tol * max(np.sqrt(scale), 1.0)
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += 2.0 * (a[i, j].real ** 2 + a[i, j].imag ** 2)
        if np.sqrt(off) <= thresh:
            w = np.empty(n)
            for i in range(n):
                w[i] = a[i, i].real
            return w, v, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                r = abs(g)
                if r < 1e-300:
                    continue
                e = g / r
                ec = np.conj(e)
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * r)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * ec * akq
                    a[k, q] = s * akp + c * ec * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * e * aqk
                    a[q, k] = s * apk + c * e * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
                if want_vectors:
                    for k in range(n):
                        vkp = v[k, p]
                        vkq = v[k, q]
                        v[k, p] = c * vkp - s * ec * vkq
                        v[k, q] = s * vkp + c * ec * vkq
    return np.empty(0), v, -1


def _check_hermitian(h: np.ndarray) -> None:
    gap = np.max(np.abs(h - h.conj().T))
    if gap > HERMITIAN_TOL * max(1.0, np.max(np.abs(h))):
        raise NotHermitian(f"max |H - H*| = {gap:.3e}")


def hermitian_eig(h, *, check: bool = True) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Eigenvalues come back ascending; equal eigenvalues keep the order in
    which the rotations left them on the diagonal.

    Raises
    ------
    NotHermitian
        If ``max |H - H*|`` exceeds 1e-12 (relative to the largest entry
        when that is above one).
    NoConvergence
        If the off-diagonal mass is still above threshold after
        100 sweeps.
    """
    h = as_matrix(h)
    if check:
        _check_hermitian(h)
    w, v, sweeps = _jacobi(h, True, JACOBI_TOL, JACOBI_MAX_SWEEPS)
    if sweeps < 0:
        raise NoConvergence(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    order = np.argsort(w, kind="stable")
    return HermitianEig(w[order], v[:, order])


def eigvalsh(h: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues only. No validation; for inner loops."""
    w, _, sweeps = _jacobi(h, False, JACOBI_TOL, JACOBI_MAX_SWEEPS)
    if sweeps < 0:
        raise NoConvergence(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    return np.sort(w)


def lambda_max(h: np.ndarray) -> float:
    w, _, sweeps = _jacobi(h, False, JACOBI_TOL, JACOBI_MAX_SWEEPS)
    if sweeps < 0:
        raise NoConvergence(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    return float(w.max())


def _clamped(eigenvalues: np.ndarray) -> np.ndarray:
    floor = -PSD_CLAMP * max(1.0, float(np.max(np.abs(eigenvalues))))
    if eigenvalues[0] < floor:
        raise NotPSD(f"eigenvalue {eigenvalues[0]:.3e} is below {floor:.1e}")
    return np.maximum(eigenvalues, 0.0)


def power_from_eig(eig: HermitianEig, p: float) -> np.ndarray:
    """``V diag(max(lam, 0) ** p) V*`` for an already computed decomposition."""
    lam = _clamped(eig.eigenvalues)
    v = eig.eigenvectors
    # 0 ** 0 == 1, so p == 0 yields the identity even on a kernel
    return hermitian_part((v * np.power(lam, p)) @ v.conj().T)


def psd_power(h, p: float) -> np.ndarray:
    """Real power ``H ** p`` of a positive semidefinite matrix.

    Eigenvalues in ``[-1e-10, 0)`` are rounding noise and are clamped to
    zero; anything more negative raises :class:`NotPSD`.
    """
    if p < 0:
        raise ValueError("power must be nonnegative")
    return power_from_eig(hermitian_eig(h), p)


def matrix_abs(a) -> np.ndarray:
    """``|A| = (A* A) ** (1/2)``."""
    a = as_matrix(a)
    return psd_power(gram(a), 0.5)


def operator_norm(a) -> float:
    """Largest singular value, computed as ``sqrt(lambda_max(A* A))``."""
    a = as_matrix(a)
    return float(np.sqrt(max(lambda_max(gram(a)), 0.0)))


def min_eig_hermitian(h) -> float:
    h = as_matrix(h)
    _check_hermitian(h)
    return float(eigvalsh(h)[0])


def singular_values(a) -> np.ndarray:
    """Singular values in ascending order."""
    a = as_matrix(a)
    return np.sqrt(np.maximum(eigvalsh(gram(a)), 0.0))
