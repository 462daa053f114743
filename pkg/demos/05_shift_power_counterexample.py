"""
Where the shift-refined bound breaks
====================================

w^{2r} <= 2^{-r} (N^r + 2^r d^{2r}) holds at r = 1 but not beyond.
Replacing 2^{-r} by 1/2 (convexity of t^r) restores it.
"""
from numrad.bounds import distance_to_scalars, shift_refined_bound, shift_refined_convex_bound

a = [[1, 1], [0, 2]]
print("distance to scalars:", distance_to_scalars(a))
print()
for r in (1, 2, 3):
    plain = shift_refined_bound(a, 0.5, r)
    fixed = shift_refined_convex_bound(a, 0.5, r)
    print(f"r = {r}:  w^2r = {plain.lhs:9.4f}   power form {plain.rhs:9.4f} ({plain.holds})"
          f"   convex form {fixed.rhs:9.4f} ({fixed.holds})")
