"""
Recomputing quoted values
=========================

Every quoted number is recomputed; a flag marks agreement to 5e-3.
"""
from numrad import reproduce_examples
from numrad.bounds import shift_sandwich_check

for row in reproduce_examples():
    print(f"{row['example']:15s} {row['quantity']:36s} quoted {row['quoted']:9.4f}"
          f"  ours {row['recomputed']:9.6f}  {row['flag']}")

# with the recomputed norms no s can satisfy both premises of the sandwich
rep = shift_sandwich_check([[1, 0.5], [0, 1]], 0.5, 0.2)
print("\nsandwich on [[1, 0.5], [0, 1]]:", rep.kind)
print("  premises:", {k: round(v, 5) for k, v in rep.premises.items()})
print("  s_max =", round(rep.params["s_max"], 5), " |A - 0.5 I| =", round(rep.params["shift_norm"], 5))
