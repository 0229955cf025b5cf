"""Projecting the Veronese surface from points and lines of its secant variety.

Conics of rank 2 are points of sec(V) not on V.  Projecting from one gives a
degree-4 surface in P^4 on two quadrics; projecting from a line through two
conics sharing a factor gives a quadric cone covered twice.

Run: python demos/05_veronese_projections.py
"""

import random

from grassmap import project_from_point, ring, secant_line, verify_line_remark, verify_point_remark
from grassmap.veronese import random_rank2_conic, reference_point_projection

R = ring("x y z")
x, y, z = R.gens()

centre, chart = reference_point_projection()
print(f"projection from {centre.to_poly()}:", ", ".join(map(str, project_from_point(centre, chart))))

for centre in (x * y, random_rank2_conic(random.Random(1))):
    rep = verify_point_remark(centre)
    print(f"\ncentre {getattr(centre, 'to_poly', lambda: centre)()}: passed = {rep.passed}")
    print("  image ideal:", ", ".join(map(str, rep.generators)))
    print("  singular locus:", rep.singular.witness)
    print("  fibre lengths over the line:", rep.fiber_lengths)

rep = verify_line_remark(secant_line(x * y, x * z))
print("\nline through xy and xz: passed =", rep.passed)
print("  image:", ", ".join(map(str, rep.generators)), f"(map degree {rep.map_degree})")
