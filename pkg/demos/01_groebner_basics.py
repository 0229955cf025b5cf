"""Exact Gröbner bases: elimination, saturation and Hilbert data.

Run: python demos/01_groebner_basics.py
"""

from grassmap import Ideal, eliminate, groebner_basis, hilbert_data, ring, saturate
from grassmap.groebner import collect_stats, irrelevant_ideal

# The cuspidal cubic as the image of t -> (t^2, t^3).
R = ring("t x y")
t, x, y = R.gens()
cusp = eliminate(Ideal(R, [x - t**2, y - t**3]), 1)
print("implicit equation of (t^2, t^3):", ", ".join(map(str, cusp.generators)))

# Embedded components disappear under saturation by the irrelevant ideal.
P2 = ring("x y z")
x, y, z = P2.gens()
I = Ideal(P2, [x**2, x * y, x * z])
print("(x^2, xy, xz) saturated:", [str(g) for g in groebner_basis(saturate(I, irrelevant_ideal(P2)))])

# Twisted cubic: dimension 1, degree 3.
P3 = ring("a b c d")
a, b, c, d = P3.gens()
with collect_stats() as stats:
    tc = Ideal(P3, [a * c - b**2, b * d - c**2, a * d - b * c])
    hd = hilbert_data(tc)
print(f"twisted cubic: dimension {hd.projective_dimension}, degree {hd.degree}")
print("engine work:", stats.as_dict())
