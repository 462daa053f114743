"""
Numerical radius by rotating the Hermitian part
================================================

w(A) is the largest eigenvalue of Re(e^{it} A) over all angles t.
"""
import math

import numpy as np

from numrad import numerical_radius, operator_norm
from numrad.radius import support_values

a = np.array([[1, 1], [0, 2]], dtype=complex)

# the support function of the numerical range, sampled on a few angles
thetas = np.linspace(0, 2 * math.pi, 8, endpoint=False)
for t, v in zip(thetas, support_values(a, thetas)):
    print(f"theta = {t:5.3f}   lambda_max = {v: .6f}")

res = numerical_radius(a)
print("\nw(A) =", res.value, " at theta =", res.argmax_theta)

# the witness x attains it: |<Ax, x>| = w(A)
x = res.witness
print("|<Ax, x>| =", abs(np.vdot(x, a @ x)))

# and the classical sandwich |A|/2 <= w(A) <= |A|
print("|A|/2 =", operator_norm(a) / 2, " |A| =", operator_norm(a))

# normal matrices sit at the top of the sandwich
q, _ = np.linalg.qr(np.array([[1, 2j], [3, -1]]))
m = q @ np.diag([2.0, -1 + 1j]) @ q.conj().T
print("\nnormal: w =", numerical_radius(m).value, " |A| =", operator_norm(m))
