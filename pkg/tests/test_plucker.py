import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import R3
from grassmap import (DependentSections, SectionQuadruple, generates_check, grassmann_relation,
                      normalize_sections, plucker_identity, plucker_map, section_basis,
                      standard_presentation, substitute, wedge_quadric)
from grassmap.bundle import SectionE
from grassmap.linalg import RatMatrix, row_space
from grassmap.pipeline import example_job
from grassmap.plucker import NotSpanning, P5, alternate_sign_relation
from grassmap.poly import coefficient_matrix, monomials_of_degree

x, y, z = R3.gens()
P = standard_presentation()


def quadruple(n, **kw):
    return SectionQuadruple.from_coefficients(example_job(n, **kw)["sections"], R3)


def strings(M):
    return [str(q) for q in M]


def test_wedge_examples():
    u, v = SectionE(1, 0, R3.zero()), SectionE(0, 1, R3.zero())
    assert wedge_quadric(u, v, P) == z**2
    assert wedge_quadric(u, SectionE(0, 0, y - z), P) == R3("-y^2+y*z")
    assert wedge_quadric(u, u, P).is_zero()


def test_example_maps():
    assert plucker_map(quadruple(1), P).quadrics == tuple(
        R3(s) for s in ("z^2", "-x*y", "-y^2", "x^2", "x*y", "0"))
    assert plucker_map(quadruple(2), P).quadrics == tuple(
        R3(s) for s in ("z^2", "-x*y", "-y^2+y*z", "x^2", "x*y-x*z", "0"))
    for a, d in ((1, 1), (2, 3), (-1, 2)):
        expected = [f"z^2", f"-(x+{d}*y)*y", f"-({a}*y+z)*y", f"(x+{d}*y)*x", f"({a}*y+z)*x", "0"]
        assert plucker_map(quadruple(3, a=a, d=d), P).quadrics == tuple(R3(s) for s in expected)


def test_generation_checks():
    assert generates_check(plucker_map(quadruple(1), P))
    rows = [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 1, 0, 0]]
    with pytest.raises(DependentSections):
        SectionQuadruple.from_coefficients(rows, R3)
    rows[3] = [0, 0, 0, 0, 1]
    M = plucker_map(SectionQuadruple.from_coefficients(rows, R3), P)
    assert strings(M) == ["z^2", "-x*y", "-y*z", "x^2", "x*z", "0"]
    # every quadric vanishes at (0:1:0), so these sections do not generate there
    assert all(q.evaluate((0, 1, 0)) == 0 for q in M)
    assert not generates_check(M)


def test_normalization():
    N = normalize_sections(quadruple(1))
    assert N.f1.is_zero() and N.f2.is_zero() and (N.f3, N.f4) == (x, y)
    assert N.change_of_basis == RatMatrix.identity(4)
    assert normalize_sections(quadruple(2)).f4 == y - z
    rows = [[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1], [1, 0, 0, 0, 0]]
    with pytest.raises(NotSpanning):
        normalize_sections(SectionQuadruple.from_coefficients(rows, R3))


def test_grassmann_relation_sign():
    G = grassmann_relation()
    assert str(G) == "Z2*Z3 - Z1*Z4 + Z0*Z5"
    M2 = plucker_map(quadruple(2), P)
    assert substitute(G, list(M2), R3).is_zero()
    M1 = plucker_map(quadruple(1), P)
    assert substitute(alternate_sign_relation(), list(M1), R3).is_zero()
    rng = random.Random(5)
    rows = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5)] for _ in range(4)]
    M = plucker_map(SectionQuadruple.from_coefficients(rows, R3), P)
    assert substitute(G, list(M), R3).is_zero()
    assert not substitute(alternate_sign_relation(), list(M), R3).is_zero()


coeff_rows = st.lists(st.lists(st.integers(-5, 5), min_size=5, max_size=5), min_size=4, max_size=4)
vecs = st.lists(st.integers(-5, 5), min_size=5, max_size=5)


@given(vecs, vecs, st.integers(-4, 4))
def test_wedge_alternating_bilinear(a, b, c):
    u, v, w = section_combine_(a), section_combine_(b), section_combine_([1, 2, 0, 1, -1])
    assert wedge_quadric(u, v, P) == -wedge_quadric(v, u, P)
    assert wedge_quadric(u.scale(c) + w, v, P) == wedge_quadric(u, v, P) * c + wedge_quadric(w, v, P)


def section_combine_(coeffs):
    from grassmap import section_combine
    return section_combine(coeffs, section_basis(R3))


@given(coeff_rows, st.integers(0, 10**6))
def test_identity_and_gl4_span(rows, seed):
    if RatMatrix(rows).rank() < 4:
        return
    S = SectionQuadruple.from_coefficients(rows, R3)
    M = plucker_map(S, P)
    assert plucker_identity(list(M)).is_zero()
    assert substitute(grassmann_relation(), list(M), R3).is_zero()
    rng = random.Random(seed)
    while True:
        G = RatMatrix([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
        if G.det():
            break
    S2 = SectionQuadruple.from_coefficients((G @ RatMatrix(rows)).rows, R3)
    mons = monomials_of_degree(3, 2)
    span = lambda m: row_space(coefficient_matrix(list(m), mons).rows)
    assert span(plucker_map(S2, P)) == span(M)


@given(coeff_rows)
def test_normal_form_quadrics(rows):
    if RatMatrix(rows).rank() < 4:
        return
    try:
        N = normalize_sections(SectionQuadruple.from_coefficients(rows, R3))
    except NotSpanning:
        return
    S = SectionQuadruple.from_sections(N.sections())
    M = plucker_map(S, P)
    assert M[5].is_zero()
    A, B, Q = P.forms()
    assert M[0] == Q - N.f2 * B - N.f1 * A
