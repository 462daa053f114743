"""
The chain of upper bounds on one matrix
=======================================
"""
import numpy as np

from numrad import verify_chain

a = np.array([[1, 1], [0, 2]], dtype=complex)
rep = verify_chain(a)

print("anchors:", {k: round(v, 6) for k, v in rep.anchors.items()})
print()
print(f"{'bound':40s} {'lhs':>12s} {'rhs':>12s} {'holds':>6s}  kind")
for b in rep.bounds:
    print(f"{b.name:40s} {b.lhs:12.6f} {b.rhs:12.6f} {str(b.holds):>6s}  {b.kind}")

# the Young refinement interpolates between Kittaneh (rho = 0) and |A| (rho = 1/2)
young = [b for b in rep.bounds if b.name.startswith("young_refined")]
print("\nrho sweep:", [round(b.rhs, 6) for b in young])

# only proven bounds count as violations
print("violations:", rep.violations)
