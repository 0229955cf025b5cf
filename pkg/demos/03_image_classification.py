"""Implicitize the image in P^5 and sort it into the two cases.

Case A: the quadrics span a 4-space, the image is a quadric cone in a P^3
covered twice.  Case B: a 5-space, the image is a degree-4 surface in a P^4
cut out by two quadrics, mapped birationally, singular along a line.

Run: python demos/03_image_classification.py
"""

from grassmap import (SectionQuadruple, classify, image_degree, implicitize, map_degree,
                      minimal_generators, plucker_map, ring, singular_locus, standard_presentation)
from grassmap.pipeline import example_job

R = ring("x y z")
P = standard_presentation(R)

for title, job in [("first example", example_job(1)), ("second example", example_job(2)),
                   ("third example, a = 2, d = 3", example_job(3, a=2, d=3))]:
    M = plucker_map(SectionQuadruple.from_coefficients(job["sections"], R), P)
    I = implicitize(list(M))
    case = classify(M, I)
    sl = singular_locus(I)
    print(f"{title}: case {case.case_tag}")
    print("  image ideal:", ", ".join(map(str, minimal_generators(I))))
    print(f"  degree {image_degree(I)} image, map of degree {map_degree(list(M), I)}")
    print(f"  singular locus: {sl.kind}, {sl.witness}")
