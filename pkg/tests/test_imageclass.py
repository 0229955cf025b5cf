import random
from fractions import Fraction

import pytest
import sympy

from conftest import R3, linear_section_count
from grassmap import (Ideal, NotGenerating, SectionQuadruple, classify, differential_at,
                      grassmann_relation, hilbert_data, ideal_equal, image_degree, implicitize,
                      map_degree, normal_form, normalize_sections, plucker_map, quadric_span, ring,
                      singular_locus, standard_presentation, substitute, veronese_map)
from grassmap.imageclass import fiber_length, quadric_rank_on_span
from grassmap.linalg import RatMatrix
from grassmap.pipeline import example_job
from grassmap.plucker import P5
from grassmap.poly import coefficient_matrix, monomials_of_degree

P = standard_presentation()
x, y, z = R3.gens()


def example_map(n, **kw):
    S = SectionQuadruple.from_coefficients(example_job(n, **kw)["sections"], R3)
    return plucker_map(S, P)


@pytest.fixture(scope="module")
def ex1():
    M = example_map(1)
    return M, implicitize(list(M))


@pytest.fixture(scope="module")
def ex2():
    M = example_map(2)
    return M, implicitize(list(M))


def test_quadric_span(ex1, ex2):
    dim, rels = quadric_span(ex1[0])
    assert dim == 4
    assert {str(r) for r in rels} == {"Z5", "Z1 + Z4"}
    dim, rels = quadric_span(ex2[0])
    assert dim == 5 and [str(r) for r in rels] == ["Z5"]
    assert quadric_span([R3.zero()] * 6)[0] == 0


def test_implicitize(ex1, ex2):
    assert ideal_equal(ex1[1], Ideal(P5, [P5(s) for s in ("Z5", "Z1+Z4", "Z1^2+Z2*Z3")]))
    assert ideal_equal(ex2[1], Ideal(P5, [P5(s) for s in ("Z5", "Z1*Z4-Z2*Z3", "(Z1+Z4)^2-Z0*Z3")]))
    for M, I in (ex1, ex2):
        assert normal_form(grassmann_relation(), I).is_zero()
        for g in I.generators:
            assert substitute(g, list(M), R3).is_zero()


def test_classify(ex1, ex2):
    c1 = classify(ex1[0], ex1[1])
    assert c1.case_tag == "A" and c1.extra_quadric is None
    assert quadric_rank_on_span(P5("Z1^2+Z2*Z3"), c1.hyperplanes) == 3
    c2 = classify(ex2[0], ex2[1])
    assert c2.case_tag == "B" and [str(h) for h in c2.hyperplanes] == ["Z5"]
    # the extra quadric is (Z1+Z4)^2 - Z0*Z3 modulo the Grassmann quadric and Z5
    mons = monomials_of_degree(6, 2)
    base = [grassmann_relation()] + [P5("Z5") * v for v in P5.gens()]
    r0 = coefficient_matrix(base + [c2.extra_quadric], mons).rank()
    assert r0 == coefficient_matrix(base + [c2.extra_quadric, P5("(Z1+Z4)^2-Z0*Z3")], mons).rank()
    assert classify(example_map(3, a=1, d=1)).case_tag == "B"
    with pytest.raises(NotGenerating):
        rows = [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 1]]
        classify(plucker_map(SectionQuadruple.from_coefficients(rows, R3), P))


def test_image_degrees(ex1, ex2):
    assert image_degree(ex1[1]) == 2 == linear_section_count(ex1[1], 2)
    assert image_degree(ex2[1]) == 4
    assert image_degree(Ideal(R3, [])) == 1


def test_map_degrees(ex1, ex2):
    assert map_degree(list(ex1[0]), ex1[1]) == 2
    assert map_degree(list(ex2[0]), ex2[1]) == 1
    assert map_degree(veronese_map()) == 1


def test_fiber_over_vertex(ex1):
    from grassmap.imageclass import fiber_ideal
    # only (0:0:1) maps to the vertex; the fiber scheme is (x^2, xy, y^2), standard monomials 1, x, y
    F = fiber_ideal(list(ex1[0]), [1, 0, 0, 0, 0, 0])
    assert ideal_equal(F, Ideal(R3, [x**2, x * y, y**2]))
    assert fiber_length(list(ex1[0]), [1, 0, 0, 0, 0, 0]) == 3


def test_singular_loci(ex1, ex2):
    s1 = singular_locus(ex1[1])
    assert s1.kind == "point" and s1.points == [[1, 0, 0, 0, 0, 0]]
    s2 = singular_locus(ex2[1])
    assert s2.kind == "line" and (s2.dimension, s2.degree) == (1, 1)
    assert len(s2.span_forms) == 3
    # the line lies on the image and every point of it is singular (Jacobian oracle via sympy)
    Zs = sympy.symbols(P5.names)
    gens = [sympy.sympify(str(g).replace("^", "**")) for g in ex2[1].generators]
    J = sympy.Matrix([[sympy.diff(g, v) for v in Zs] for g in gens])
    for pt in s2.points:
        sub = dict(zip(Zs, pt))
        assert all(g.subs(sub) == 0 for g in gens)
        assert J.subs(sub).rank() < 3
    P3 = ring("Z0 Z1 Z2 Z3")
    assert singular_locus(Ideal(P3, [P3("Z0*Z3 - Z1*Z2")])).kind == "empty"


def test_differential_vanishes_at_base_point(ex1):
    D = differential_at(list(ex1[0]), (0, 0, 1), 2, 0)
    assert D == RatMatrix.zeros(5, 2)
    # sympy oracle on the chart z = 1, Z0 = 1
    a, b = sympy.symbols("x y")
    F = sympy.Matrix([-a * b, -b**2, a**2, a * b, 0])
    assert F.jacobian([a, b]).subs({a: 0, b: 0}) == sympy.zeros(5, 2)


def test_degree_conservation_examples():
    for n, kw in ((1, {}), (2, {}), (3, {"a": 2, "d": 3}), (3, {"a": -1, "d": 2})):
        M = example_map(n, **kw)
        I = implicitize(list(M))
        assert image_degree(I) * map_degree(list(M), I) == 4


def _random_generating_quadruple(rng):
    while True:
        rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(5)] for _ in range(4)]
        if RatMatrix(rows).rank() == 4:
            return SectionQuadruple.from_coefficients(rows, R3)


@pytest.mark.parametrize("seed", range(4))
def test_case_criterion_from_normal_form(seed):
    rng = random.Random(seed)
    S = _random_generating_quadruple(rng)
    if seed % 2:
        # force f3, f4 into span(A, B) = span(x, y): a case-A configuration
        rows = [[1, 0, 0, 0, rng.randint(-3, 3)], [0, 1, rng.randint(-3, 3), 0, 0],
                [0, 0, 1, 2, 0], [0, 0, 3, -1, 0]]
        S = SectionQuadruple.from_coefficients(rows, R3)
    N = normalize_sections(S)
    M = plucker_map(S, P)
    span34 = RatMatrix([[f.coefficient(m) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
                        for f in (N.f3, N.f4)])
    in_ab = all(row[2] == 0 for row in span34.rows)
    M_norm = plucker_map(SectionQuadruple.from_sections(N.sections()), P)
    five = coefficient_matrix(list(M_norm)[:5], monomials_of_degree(3, 2)).rank() < 5
    assert (quadric_span(M)[0] == 4) == (in_ab or five)
