"""Implicitization and classification of the image of P^2 in P^5."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .groebner import (GREVLEX, Ideal, eliminate, groebner_basis, hilbert_data,
                       homogeneous_part, in_radical, irrelevant_ideal, is_empty_projective,
                       minimal_generators, normal_form, saturate)
from .linalg import RatMatrix, kernel, quadratic_form_matrix, rref
from .plucker import P5, PluckerMap, grassmann_relation
from .poly import Poly, Ring, coefficient_matrix, monomials_of_degree
from .subspace import LinearSection


class NotGenerating(ValueError):
    code = "NOT_GENERATING"


class NonGenericSamples(RuntimeError):
    code = "NON_GENERIC"


class UnsupportedShape(ValueError):
    code = "UNSUPPORTED_SHAPE"


def image_ring(n: int) -> Ring:
    return Ring(tuple(f"Z{i}" for i in range(n)))


def _target_ring(M) -> Ring:
    return P5 if len(M) == 6 else image_ring(len(M))


def quadric_span(M: Sequence[Poly]) -> tuple[int, list[Poly]]:
    """Dimension of the span of the quadrics and the linear relations among them.

    Relations are returned as linear forms in ``Z0..Z(n-1)``, one per free
    column of the reduced echelon form of the transposed coefficient matrix.
    """
    M = list(M)
    R = M[0].ring
    T = _target_ring(M)
    mons = monomials_of_degree(R.nvars, 2)
    C = coefficient_matrix(M, mons)
    rank = C.rank()
    rel = kernel(C.transpose().rows, len(M))
    n = len(M)
    forms = [Poly(T, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(v) if c})
             for v in rel]
    return rank, forms


def _random_rational(rng: random.Random, bound: int = 20) -> Fraction:
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def graph_ideal(M: Sequence[Poly]) -> Ideal:
    """``(Z_i - p_i)`` in the ring ``(x, y, z, Z0, ...)``."""
    M = list(M)
    R = M[0].ring
    T = _target_ring(M)
    big = Ring(R.names + T.names)
    gens = []
    for i, p in enumerate(M):
        gens.append(T.var(i).embed(big) - p.embed(big))
    return Ideal(big, gens)


def implicitize(M: Sequence[Poly]) -> Ideal:
    """Homogeneous ideal of the closure of the image of the map given by ``M``."""
    M = list(M)
    k = M[0].ring.nvars
    out = eliminate(graph_ideal(M), k)
    if not out.is_homogeneous():
        raise AssertionError("elimination produced an inhomogeneous image ideal")
    return out


@dataclass
class CaseReport:
    span_dim: int
    case_tag: str                       # "A", "B" or "out-of-scope"
    hyperplanes: list
    extra_quadric: Poly | None
    image_ideal: Ideal
    relations_count: int = 0
    notes: list = field(default_factory=list)


def classify(M: PluckerMap | Sequence[Poly], image: Ideal | None = None) -> CaseReport:
    """Case A (two hyperplanes), case B (hyperplane and quadric) or out of scope."""
    quads = list(M)
    R = quads[0].ring
    nonzero = [q for q in quads if q]
    if not nonzero or not is_empty_projective(Ideal(R, nonzero)):
        raise NotGenerating("the quadrics have a common zero; the sections do not generate")
    span, rels = quadric_span(quads)
    I = image if image is not None else implicitize(quads)
    if span == 4:
        return CaseReport(span, "A", rels, None, I, len(rels))
    if span == 5:
        return CaseReport(span, "B", rels, _extra_quadric(I, rels), I, len(rels))
    return CaseReport(span, "out-of-scope", rels, None, I, len(rels),
                      notes=["span of the quadrics has dimension <= 3: special morphism"])


def _extra_quadric(I: Ideal, hyperplanes: Sequence[Poly]) -> Poly | None:
    """A quadric of ``I`` outside the span of the Grassmann quadric and the hyperplane multiples."""
    R = I.ring
    quads = homogeneous_part(I, 2)
    base = [grassmann_relation(R)] + [h * v for h in hyperplanes for v in R.gens()]
    mons = monomials_of_degree(R.nvars, 2)
    base_rank = coefficient_matrix(base, mons).rank()
    for q in quads:
        if coefficient_matrix(base + [q], mons).rank() > base_rank:
            return _canonical_mod(q, base, mons, R)
    return None


def _canonical_mod(q: Poly, base: Sequence[Poly], mons, R: Ring) -> Poly:
    """``q`` reduced against the echelon form of ``base`` (a canonical coset representative)."""
    rows = coefficient_matrix(base, mons).rows
    red, piv = rref(rows)
    v = list(coefficient_matrix([q], mons).rows[0])
    for row, p in zip(red, piv):
        if v[p]:
            c = v[p]
            v = [a - c * b for a, b in zip(v, row)]
    out = Poly(R, {mons[j]: c for j, c in enumerate(v) if c})
    return out.primitive()


def image_degree(I: Ideal) -> int:
    hd = hilbert_data(I)
    if hd.projective_dimension != 2:
        raise ValueError(f"image has projective dimension {hd.projective_dimension}, not 2")
    return hd.degree


def fiber_ideal(M: Sequence[Poly], target: Sequence) -> Ideal:
    """Points of P^2 mapping to ``target``: 2x2 minors of ``(p(x); target)``, saturated."""
    M = list(M)
    R = M[0].ring
    c = [Fraction(v) for v in target]
    gens = []
    for i, j in combinations(range(len(M)), 2):
        g = M[i] * c[j] - M[j] * c[i]
        if g:
            gens.append(g)
    return saturate(Ideal(R, gens), irrelevant_ideal(R))


def fiber_length(M: Sequence[Poly], target: Sequence) -> int | None:
    """Length of the fiber over ``target``, or None when the fiber is not finite."""
    hd = hilbert_data(fiber_ideal(M, target))
    if hd.projective_dimension == 0:
        return hd.degree
    if hd.projective_dimension < 0:
        return 0
    return None


def random_point(n: int, rng: random.Random, bound: int = 20) -> list[Fraction]:
    while True:
        pt = [_random_rational(rng, bound) for _ in range(n)]
        if any(pt):
            return pt


def map_degree(M: Sequence[Poly], I: Ideal | None = None, seed=0, trials: int = 5) -> int:
    """Generic fiber length: minimum over fibers through random rational points of P^2."""
    M = list(M)
    rng = _rng(seed)
    R = M[0].ring
    lengths = []
    for _ in range(trials):
        q = random_point(R.nvars, rng)
        target = [p.evaluate(q) for p in M]
        if not any(target):
            continue
        n = fiber_length(M, target)
        if n:
            lengths.append(n)
    if not lengths:
        raise NonGenericSamples("no sampled fiber was finite; increase trials")
    return min(lengths)


def linear_span(I: Ideal) -> LinearSection:
    """The smallest linear subspace containing ``V(I)`` as read off the linear forms in ``I``."""
    return LinearSection(I.ring, homogeneous_part(I, 1))


def restrict_ideal(I: Ideal, L: LinearSection) -> Ideal:
    return Ideal(L.ring, [L.restrict(g) for g in groebner_basis(I, GREVLEX)])


@dataclass
class SingularLocus:
    ideal: Ideal
    kind: str                   # "empty", "point", "line", "other"
    witness: str
    points: list = field(default_factory=list)
    linear_forms: list = field(default_factory=list)
    dimension: int = -1
    degree: int | None = None
    span_forms: list = field(default_factory=list)


def jacobian_ideal(I: Ideal, codim: int) -> Ideal:
    """``I`` plus the ``codim``-minors of the Jacobian of its minimal generators."""
    from .poly import jacobian_matrix
    gens = minimal_generators(I)
    R = I.ring
    if codim <= 0:
        raise UnsupportedShape("jacobian criterion needs positive codimension")
    if len(gens) < codim:
        raise UnsupportedShape(
            f"{len(gens)} generators cannot cut out codimension {codim}")
    J = jacobian_matrix(gens)
    minors = []
    for rows in combinations(range(len(gens)), codim):
        for cols in combinations(range(R.nvars), codim):
            m = _poly_det([[J[r][c] for c in cols] for r in rows], R)
            if m:
                minors.append(m)
    return Ideal(R, list(gens) + _span_basis(minors))


def _span_basis(polys: Sequence[Poly]) -> list[Poly]:
    """A basis of the linear span of homogeneous polynomials (drops redundant minors)."""
    if not polys:
        return []
    by_deg: dict = {}
    for p in polys:
        by_deg.setdefault(p.degree(), []).append(p)
    out = []
    for d, ps in sorted(by_deg.items()):
        mons = sorted({m for p in ps for m in p.terms}, reverse=True)
        red, _ = rref(coefficient_matrix(ps, mons).rows)
        R = ps[0].ring
        out += [Poly(R, {mons[j]: c for j, c in enumerate(r) if c}) for r in red]
    return out


def _poly_det(rows: list[list[Poly]], R: Ring) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = R.zero()
    for j in range(n):
        if not rows[0][j]:
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _poly_det(sub, R)
        total = total + term if j % 2 == 0 else total - term
    return total


def classify_locus(J: Ideal, L: LinearSection | None = None, seed=0) -> SingularLocus:
    """Classify the zero set of a saturated homogeneous ideal living on ``L`` (or its own ring).

    ``point`` and ``line`` are reported only when the zero set is exactly a
    linear space of that dimension and the Hilbert degree is 1.
    """
    hd = hilbert_data(J)
    ambient = L.ambient if L is not None else J.ring
    lift = L.lift if L is not None else (lambda f: f)
    ambient_forms = L.forms() if L is not None else []
    if hd.projective_dimension < 0:
        return SingularLocus(Ideal(ambient, [ambient.one()]), "empty", "empty")
    gb = groebner_basis(J, GREVLEX)
    amb_ideal = Ideal(ambient, ambient_forms + [lift(g) for g in gb])
    e = hd.projective_dimension
    lin = None
    if hd.degree == 1 and e in (0, 1):
        lin = _reduced_linear_support(J, e, _rng(seed))
    if lin is None:
        return SingularLocus(amb_ideal, "other", f"dimension {e}, degree {hd.degree}",
                             dimension=e, degree=hd.degree)
    pts = _linear_space_points(lin, J.ring)
    if L is not None:
        pts = [L.lift_point(p) for p in pts]
    amb_lin = [f.primitive() for f in _span_basis(ambient_forms + [lift(f) for f in lin])]
    kind = "point" if e == 0 else "line"
    coords = ["(" + ":".join(str(v) for v in p) + ")" for p in pts]
    witness = coords[0] if kind == "point" else "line through " + " and ".join(coords)
    return SingularLocus(amb_ideal, kind, witness, pts, amb_lin, e, hd.degree,
                         span_forms=[f.primitive() for f in lin])


def _reduced_linear_support(J: Ideal, e: int, rng: random.Random, attempts: int = 8):
    """Linear forms cutting out ``V(J)`` when it is a linear space of dimension ``e``, else None.

    Candidates come from ``J`` itself (``e = 0``) or from points cut by random
    hyperplanes (``e = 1``); the answer is then certified exactly: ``J`` lies
    in the ideal of the linear space and every form lies in the radical of ``J``.
    """
    R = J.ring
    n = R.nvars
    if e == 0:
        lin = homogeneous_part(J, 1)
        if len(lin) != n - 1:
            return None
    else:
        pts: list = []
        for _ in range(attempts):
            H = Poly(R, {tuple(int(i == j) for j in range(n)): _random_rational(rng)
                         for i in range(n)})
            K = saturate(J + Ideal(R, [H]), irrelevant_ideal(R))
            hk = hilbert_data(K)
            if hk.projective_dimension != 0 or hk.degree != 1:
                continue
            p = _linear_space_points(homogeneous_part(K, 1), R)[0]
            if not pts or RatMatrix(pts + [p]).rank() > len(pts):
                pts.append(p)
            if len(pts) == 2:
                break
        if len(pts) < 2:
            return None
        lin = [Poly(R, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(v) if c})
               for v in kernel(pts, n)]
    lin_ideal = Ideal(R, lin)
    if any(normal_form(g, lin_ideal) for g in groebner_basis(J, GREVLEX)):
        return None
    if not all(in_radical(f, J) for f in lin):
        return None
    return lin


def _linear_space_points(lin: Sequence[Poly], R: Ring) -> list[list[Fraction]]:
    n = R.nvars
    rows = [[f.coefficient(tuple(int(i == j) for j in range(n))) for i in range(n)] for f in lin]
    if not rows:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return kernel(rows, n)


def singular_locus(I: Ideal, seed=0) -> SingularLocus:
    """Singular locus of the surface ``V(I)`` via the Jacobian criterion inside its linear span."""
    hd = hilbert_data(I)
    if hd.projective_dimension != 2:
        raise UnsupportedShape("singular_locus expects a surface")
    L = linear_span(I)
    I_sub = restrict_ideal(I, L)
    codim = L.dimension - 2
    if codim == 0:
        return SingularLocus(Ideal(I.ring, [I.ring.one()]), "empty", "empty")
    J = jacobian_ideal(I_sub, codim)
    if is_empty_projective(J):
        return SingularLocus(Ideal(I.ring, [I.ring.one()]), "empty", "empty")
    Jsat = saturate(J, irrelevant_ideal(J.ring))
    return classify_locus(Jsat, L, seed)


def quadric_rank_on_span(q: Poly, hyperplanes: Sequence[Poly]) -> int:
    """Rank of the quadric ``q`` restricted to the common zero set of ``hyperplanes``."""
    L = LinearSection(q.ring, hyperplanes)
    return quadratic_form_matrix(L.restrict(q)).rank()


def differential_at(M: Sequence[Poly], point: Sequence, chart_var: int, target_chart: int) -> RatMatrix:
    """Jacobian of the dehomogenized map at ``point``.

    Domain chart: divide by variable ``chart_var``; target chart: divide by
    coordinate ``target_chart``.  Rows are the remaining target coordinates,
    columns the remaining domain coordinates.
    """
    M = list(M)
    R = M[0].ring
    pt = [Fraction(v) for v in point]
    if not pt[chart_var]:
        raise ValueError("point is not in the chosen domain chart")
    pt = [v / pt[chart_var] for v in pt]
    denom = M[target_chart]
    d0 = denom.evaluate(pt)
    if not d0:
        raise ValueError("image point is not in the chosen target chart")
    free = [i for i in range(R.nvars) if i != chart_var]
    rows = []
    for k, p in enumerate(M):
        if k == target_chart:
            continue
        row = []
        for i in free:
            # d(p/denom)/dv = (p' denom - p denom') / denom^2
            num = p.diff(i).evaluate(pt) * d0 - p.evaluate(pt) * denom.diff(i).evaluate(pt)
            row.append(num / (d0 * d0))
        rows.append(row)
    return RatMatrix(rows)
