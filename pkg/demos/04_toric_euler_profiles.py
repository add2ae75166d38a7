"""
Toric varieties and Euler profiles
==================================

A toric variety enters through its cone counts d_0, ..., d_n.  Smooth and
proper counts determine the whole table through Betti numbers; simplicial
or unclassified counts still determine every chi_p, because the Euler
profile is additive over the torus-orbit decomposition.
"""

from lawson import (
    chi_toric,
    euler_profile,
    evaluate,
    parse,
    smooth_toric_betti,
    toric_smooth_table,
)

# The fan of the projective plane has 1 + 3 + 3 cones; the quadric surface
# fan has 1 + 4 + 4.
for counts in ((1, 3, 3), (1, 4, 4), (1, 4, 6, 4)):
    print(f"cone counts {counts}: Betti {smooth_toric_betti(counts)}")

# Full table for the quadric-surface fan.
table = toric_smooth_table((1, 4, 4))
print("toric([1,4,4]) row r=0:", [table.ranks.get((0, k), 0) for k in range(5)])

# chi_p from the counts alone, no smoothness needed.   chi_0 always equals
# the number of top-dimensional cones.
print("chi profile of [1,3,3]:", [chi_toric((1, 3, 3), p) for p in range(3)])
print("chi_0 of [1,4,6,4]:", chi_toric((1, 4, 6, 4), 0))

# The same profile through expressions.  A simplicial flag blocks the full
# table but not the profile.
print("euler_profile(toric([1,3,3],simplicial)):",
      euler_profile(parse("toric([1,3,3],simplicial)")).values)
try:
    evaluate(parse("toric([1,3,3],simplicial)"))
except ValueError as exc:
    print("full table with the simplicial flag:", exc)
