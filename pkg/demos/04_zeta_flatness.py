"""
The Kantorovich factor collapses to one
=======================================

zeta(x) = K(<|A|x,x> / <|A*|x,x>)^rho is at least 1, and since
tr|A| = tr|A*| some unit x makes the two quadratic forms equal.
So the infimum is exactly 1 for every square matrix.
"""
import numpy as np

from numrad import zeta_at, zeta_inf

rng = np.random.default_rng(3)
j = np.array([[1, 1], [0, 1]], dtype=complex)

print("zeta(e1) for the Jordan block:", zeta_at(j, [1, 0], 0.5))
print("its infimum:                  ", zeta_inf(j, 0.5))

print()
for n in (2, 3, 5, 8):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    print(f"n = {n}:  inf zeta =", [round(zeta_inf(a, lam), 12) for lam in (0.1, 0.3, 0.5)])
