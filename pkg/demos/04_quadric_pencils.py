"""Pencils of quadrics: singular members and rank strata.

In case B the image lies on a pencil of quadrics in P^4 whose determinant
vanishes identically; the members of rank 3 are the interesting ones.

Run: python demos/04_quadric_pencils.py
"""

from grassmap import (pencil_determinant, pencil_from_forms, pencil_generic_rank, rank_strata, ring)
from grassmap.binary import strip

P5 = ring("Z0 Z1 Z2 Z3 Z4 Z5")
pen = pencil_from_forms(P5("Z1*Z4 - Z2*Z3"), P5("(Z1+Z4)^2 - Z0*Z3"), [P5("Z5")])
print("determinant of lam*M1 + mu*M2 is zero:", not strip(pencil_determinant(pen)))
r = pencil_generic_rank(pen)
print("generic rank:", r)
for s in rank_strata(pen, r):
    print("  ", s.describe())

# A diagonal pencil for contrast: nonzero determinant, four rank-3 members.
P3 = ring("a b c d")
diag = pencil_from_forms(P3("a^2 + b^2 + c^2 + d^2"), P3("a^2 + 2*b^2 + 3*c^2 + 4*d^2"))
print("\ndiagonal pencil determinant coefficients:", [str(c) for c in pencil_determinant(diag)])
for s in rank_strata(diag):
    print("  ", s.describe())
