"""From a presentation of the bundle to the six Plücker quadrics.

The bundle is the cokernel of (A, B, Q): O(-1) -> O + O + O(1).  Four of its
five basis sections give a map of P^2 into the Grassmannian Gr(2, 4) in P^5.

Run: python demos/02_plucker_map.py
"""

from grassmap import (SectionQuadruple, chern_of_cokernel, generates_check, grassmann_relation,
                      plucker_identity, plucker_map, ring, section_basis, standard_presentation,
                      substitute)

R = ring("x y z")
P = standard_presentation(R)
print("presentation:", P)
print("chern classes (c1, c2):", tuple(chern_of_cokernel(*P.twists())))
print("section basis:", ", ".join(map(str, section_basis(P))))

for label, rows in [
    ("w1, w2, w3, w4", [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]]),
    ("w1, w2, w3, w4 - w5", [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, -1]]),
    ("w1, w2, w3, w5", [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 1]]),
]:
    M = plucker_map(SectionQuadruple.from_coefficients(rows, R), P)
    print(f"\nsections {label}")
    print("  quadrics:", ", ".join(M.strings()))
    print("  generate everywhere:", generates_check(M))
    print("  p12 p34 - p13 p24 + p14 p23 =", plucker_identity(list(M)))
    print("  Grassmann quadric pulls back to", substitute(grassmann_relation(), list(M), R))
