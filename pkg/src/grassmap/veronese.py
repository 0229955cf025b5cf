"""The Veronese surface in P^5 = P(conics) and its projections from secant centres.

Coordinates ``Z0..Z5`` on P^5 are those of the Veronese map
``(x^2, x*y, x*z, y^2, y*z, z^2)``, so a point is a symmetric matrix
``[[Z0, Z1, Z2], [Z1, Z3, Z4], [Z2, Z4, Z5]]``.  The conic
``a*x^2 + b*x*y + c*x*z + d*y^2 + e*y*z + f*z^2`` sits at
``(a, b/2, c/2, d, e/2, f)``: the point whose matrix is the conic's own
symmetric matrix.  V is then the locus of double lines (rank 1) and its
secant variety the rank <= 2 conics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import binary
from .bundle import P2
from .groebner import Ideal, eliminate, hilbert_data, irrelevant_ideal, minimal_generators, saturate
from .imageclass import (SingularLocus, _random_rational, _rng, fiber_length, graph_ideal, image_degree,
                         implicitize, map_degree, singular_locus)
from .linalg import RatMatrix, kernel, quadratic_form_matrix
from .pencil import (QuadricPencil, pencil_determinant, pencil_generic_rank,
                     rank_strata)
from .poly import Poly, Ring, monomials_of_degree, substitute

CONIC_MONOMIALS = tuple(monomials_of_degree(3, 2))   # x^2, xy, xz, y^2, yz, z^2
P5_CONICS = Ring(tuple(f"Z{i}" for i in range(6)))


class NotOnSecantMinusV(ValueError):
    code = "NOT_ON_SECANT_MINUS_V"


class InvalidLine(ValueError):
    code = "INVALID_LINE"


@dataclass(frozen=True)
class ConicPoint:
    coeffs: tuple

    def __post_init__(self):
        c = tuple(Fraction(v) for v in self.coeffs)
        if len(c) != 6:
            raise ValueError("a conic has six coefficients")
        if not any(c):
            raise ValueError("the zero conic is not a point of P^5")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_poly(cls, q: Poly) -> "ConicPoint":
        if not q.is_homogeneous(2) or q.ring.nvars != 3:
            raise ValueError("a conic is a quadratic form in three variables")
        return cls(tuple(q.coefficient(m) for m in CONIC_MONOMIALS))

    @classmethod
    def from_coordinates(cls, z: Sequence) -> "ConicPoint":
        z = [Fraction(v) for v in z]
        return cls((z[0], 2 * z[1], 2 * z[2], z[3], 2 * z[4], z[5]))

    def coordinates(self) -> tuple:
        a, b, c, d, e, f = self.coeffs
        h = Fraction(1, 2)
        return (a, b * h, c * h, d, e * h, f)

    def to_poly(self, R: Ring = P2) -> Poly:
        return Poly(R, dict(zip(CONIC_MONOMIALS, self.coeffs)))

    def matrix(self) -> RatMatrix:
        a, b, c, d, e, f = self.coordinates()
        return RatMatrix([[a, b, c], [b, d, e], [c, e, f]])

    def __str__(self):
        return str(self.to_poly())


def veronese_map(R: Ring = P2) -> list[Poly]:
    """``(x^2, x*y, x*z, y^2, y*z, z^2)``."""
    return [Poly(R, {m: 1}) for m in CONIC_MONOMIALS]


def conic_rank(p: ConicPoint | Poly) -> int:
    if isinstance(p, Poly):
        p = ConicPoint.from_poly(p)
    return p.matrix().rank()


def secant_cubic(R: Ring = P5_CONICS) -> Poly:
    """Determinant of the symmetric matrix of the general conic, a cubic in ``Z0..Z5``."""
    Z = R.gens()
    m = [[Z[0], Z[1], Z[2]], [Z[1], Z[3], Z[4]], [Z[2], Z[4], Z[5]]]
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def _pencil_of_conics(p: ConicPoint, q: ConicPoint) -> list[list[list[Fraction]]]:
    """Entries of ``s*P + t*Q`` as binary forms ``[s-coeff, t-coeff]``."""
    A, B = p.matrix(), q.matrix()
    return [[[A[i, j], B[i, j]] for j in range(3)] for i in range(3)]


def _det2(E, r, c):
    from .pencil import _form_add, _form_mul
    return _form_add(_form_mul(E[r[0]][c[0]], E[r[1]][c[1]]),
                     _form_mul(E[r[0]][c[1]], E[r[1]][c[0]]), -1)


@dataclass(frozen=True)
class SecantLine:
    endpoints: tuple

    def point(self, s, t) -> ConicPoint:
        p, q = self.endpoints
        return ConicPoint(tuple(Fraction(s) * a + Fraction(t) * b
                                for a, b in zip(p.coeffs, q.coeffs)))

    def validate(self) -> "SecantLine":
        from .pencil import _form_det
        p, q = self.endpoints
        if RatMatrix([p.coeffs, q.coeffs]).rank() != 2:
            raise InvalidLine("endpoints coincide in P^5")
        E = _pencil_of_conics(p, q)
        if binary.strip(_form_det(E, range(3), range(3))):
            raise InvalidLine("line is not contained in the secant variety")
        from itertools import combinations
        minors = [_det2(E, r, c) for r in combinations(range(3), 2)
                  for c in combinations(range(3), 2)]
        g, inf_mult = binary.binary_gcd(minors, 2)
        if inf_mult or len(g) > 1:
            raise InvalidLine("line meets the Veronese surface")
        return self


def secant_line(p: ConicPoint | Poly, q: ConicPoint | Poly) -> SecantLine:
    p = p if isinstance(p, ConicPoint) else ConicPoint.from_poly(p)
    q = q if isinstance(q, ConicPoint) else ConicPoint.from_poly(q)
    return SecantLine((p, q)).validate()


def special_line(L0: Poly, m1: Poly, m2: Poly) -> SecantLine:
    """Line through ``[L0*m1]`` and ``[L0*m2]`` inside the plane of conics containing ``L0``."""
    for f in (L0, m1, m2):
        if not f.is_homogeneous(1) or not f:
            raise InvalidLine(f"{f} is not a nonzero linear form")
    p, q = ConicPoint.from_poly(L0 * m1), ConicPoint.from_poly(L0 * m2)
    for end in (p, q):
        if conic_rank(end) == 1:
            raise InvalidLine(f"endpoint {end} is a double line")
    return SecantLine((p, q)).validate()


def _projection_images(center: Sequence[ConicPoint], chart, R: Ring, k: int) -> list[Poly]:
    rows = [list(c.coordinates()) for c in center]
    if chart is None:
        chart = kernel(rows, 6)
    chart = [[Fraction(v) for v in r] for r in chart]
    if len(chart) != k or RatMatrix(chart).rank() != k:
        raise ValueError(f"chart must be {k} independent linear forms on P^5")
    for r in chart:
        for c in rows:
            if sum(a * b for a, b in zip(r, c)):
                raise ValueError("chart forms must vanish on the centre")
    V = veronese_map(R)
    out = []
    for r in chart:
        f = R.zero()
        for a, v in zip(r, V):
            if a:
                f = f + v * a
        out.append(f)
    return out


def project_from_point(p: ConicPoint | Poly, chart=None, R: Ring = P2) -> list[Poly]:
    """Veronese map followed by the linear projection from the rank-2 conic ``p``.

    ``chart`` is a 5x6 matrix of linear forms vanishing at ``p``; by default
    the echelon basis of the annihilator of ``p``.
    """
    p = p if isinstance(p, ConicPoint) else ConicPoint.from_poly(p)
    if conic_rank(p) != 2:
        raise NotOnSecantMinusV(f"{p} has conic rank {conic_rank(p)}, not 2")
    return _projection_images([p], chart, R, 5)


def project_from_line(line: SecantLine, chart=None, R: Ring = P2) -> list[Poly]:
    line.validate()
    return _projection_images(list(line.endpoints), chart, R, 4)


def reference_point_projection() -> tuple[ConicPoint, list[list[int]]]:
    """Centre with coordinates ``(0:0:0:1:1:0)`` and the chart giving ``(z^2, -xy, -y^2+yz, x^2, xy-xz)``.

    Read naively as coefficients that point is ``y^2 + y*z``; as a conic it
    is ``y^2 + 2*y*z``.  Both are line pairs.
    """
    center = ConicPoint.from_coordinates((0, 0, 0, 1, 1, 0))
    chart = [[0, 0, 0, 0, 0, 1],
             [0, -1, 0, 0, 0, 0],
             [0, 0, 0, -1, 1, 0],
             [1, 0, 0, 0, 0, 0],
             [0, 1, -1, 0, 0, 0]]
    return center, chart


@dataclass
class RemarkReport:
    passed: bool
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    parametrization: list = field(default_factory=list)
    image_ideal: Ideal | None = None
    generators: list = field(default_factory=list)
    pencil: QuadricPencil | None = None
    strata: list = field(default_factory=list)
    singular: SingularLocus | None = None
    preimage: Ideal | None = None
    fiber_lengths: list = field(default_factory=list)
    image_degree: int | None = None
    map_degree: int | None = None

    def check(self, name: str, ok: bool, detail=""):
        self.checks[name] = bool(ok)
        if not ok:
            self.failures.append(f"{name}: {detail}" if detail else name)
            self.passed = False


def image_of_subscheme(M: Sequence[Poly], J: Ideal) -> Ideal:
    """Ideal of the image of ``V(J)`` under the map given by ``M``."""
    G = graph_ideal(M)
    extra = [g.embed(G.ring) for g in J.generators]
    return eliminate(Ideal(G.ring, list(G.generators) + extra), J.ring.nvars)


def _random_on_line(points: Sequence[Sequence[Fraction]], rng: random.Random) -> list[Fraction]:
    while True:
        s, t = _random_rational(rng), _random_rational(rng)
        v = [s * a + t * b for a, b in zip(*points)]
        if any(v):
            return v


def verify_point_remark(p: ConicPoint | Poly, seed=0, chart=None, fiber_samples: int = 2) -> RemarkReport:
    """Projection from a point of sec(V) minus V: two quadrics, rank 3/4 pencil, singular line, double cover."""
    rng = _rng(seed)
    p = p if isinstance(p, ConicPoint) else ConicPoint.from_poly(p)
    M = project_from_point(p, chart)
    rep = RemarkReport(True, parametrization=M)
    I = implicitize(M)
    rep.image_ideal = I
    gens = minimal_generators(I)
    rep.generators = gens
    rep.check("two_quadric_generators", len(gens) == 2 and all(g.degree() == 2 for g in gens),
              [str(g) for g in gens])
    rep.image_degree = image_degree(I)
    rep.check("image_degree_4", rep.image_degree == 4, rep.image_degree)
    rep.map_degree = map_degree(M, I, rng)
    rep.check("birational", rep.map_degree == 1, rep.map_degree)
    if len(gens) == 2:
        P = QuadricPencil(quadratic_form_matrix(gens[0]), quadratic_form_matrix(gens[1]),
                          tuple(gens))
        rep.pencil = P
        rep.check("pencil_determinant_zero", not binary.strip(pencil_determinant(P)))
        r = pencil_generic_rank(P, rng)
        rep.check("pencil_generic_rank_4", r == 4, r)
        strata = rank_strata(P, r)
        rep.strata = strata
        rep.check("rank_3_members", bool(strata) and all(s.rank == 3 for s in strata),
                  [s.describe() for s in strata])
    sl = singular_locus(I, rng)
    rep.singular = sl
    rep.check("singular_line", sl.kind == "line", sl.witness)
    if sl.kind == "line":
        pulled = [substitute(f, M, M[0].ring) for f in sl.linear_forms]
        pre = saturate(Ideal(M[0].ring, pulled), irrelevant_ideal(M[0].ring))
        rep.preimage = pre
        hd = hilbert_data(pre)
        # a line of P^2 is a conic on V
        on_v = hilbert_data(image_of_subscheme(veronese_map(pre.ring), pre))
        rep.check("preimage_conic",
                  (hd.projective_dimension, hd.degree) == (1, 1)
                  and (on_v.projective_dimension, on_v.degree) == (1, 2),
                  f"P^2 dimension {hd.projective_dimension} degree {hd.degree}, "
                  f"on V dimension {on_v.projective_dimension} degree {on_v.degree}")
        for _ in range(fiber_samples):
            target = _random_on_line(sl.points, rng)
            rep.fiber_lengths.append(fiber_length(M, target))
        rep.check("double_cover_of_line", all(n == 2 for n in rep.fiber_lengths),
                  rep.fiber_lengths)
    return rep


def verify_line_remark(line: SecantLine, seed=0, chart=None) -> RemarkReport:
    """Projection from a line in sec(V) missing V: a rank-3 quadric cone in P^3, covered twice."""
    rng = _rng(seed)
    M = project_from_line(line, chart)
    rep = RemarkReport(True, parametrization=M)
    I = implicitize(M)
    rep.image_ideal = I
    gens = minimal_generators(I)
    rep.generators = gens
    single = len(gens) == 1 and gens[0].degree() == 2
    rep.check("single_quadric", single, [str(g) for g in gens])
    if single:
        rk = quadratic_form_matrix(gens[0]).rank()
        rep.check("quadric_rank_3", rk == 3, rk)
    rep.image_degree = image_degree(I)
    rep.check("image_degree_2", rep.image_degree == 2, rep.image_degree)
    sl = singular_locus(I, rng)
    rep.singular = sl
    rep.check("vertex_point", sl.kind == "point", sl.witness)
    rep.map_degree = map_degree(M, I, rng)
    rep.check("two_to_one", rep.map_degree == 2, rep.map_degree)
    return rep


def random_linear_form(rng: random.Random, R: Ring = P2) -> Poly:
    while True:
        f = Poly(R, {tuple(int(i == j) for j in range(3)): _random_rational(rng) for i in range(3)})
        if f:
            return f


def random_rank2_conic(rng: random.Random) -> ConicPoint:
    while True:
        c = ConicPoint.from_poly(random_linear_form(rng) * random_linear_form(rng))
        if conic_rank(c) == 2:
            return c


def random_special_line(rng: random.Random) -> SecantLine:
    while True:
        try:
            return special_line(random_linear_form(rng), random_linear_form(rng),
                                random_linear_form(rng))
        except InvalidLine:
            continue
