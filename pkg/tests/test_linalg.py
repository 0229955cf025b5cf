import random
from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from conftest import R3, forms, small_fracs
from grassmap import RatMatrix, kernel, quadratic_form_matrix, ring
from grassmap.linalg import form_from_matrix, matrix_rank_kernel, rref
from grassmap.poly import coefficient_matrix, monomials_of_degree

P4 = ring("Z0 Z1 Z2 Z3 Z4")


def sym(M: RatMatrix):
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in M.rows])


matrices = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 5).flatmap(
        lambda m: st.lists(st.lists(small_fracs, min_size=m, max_size=m), min_size=n, max_size=n)))


def test_identity_and_zero():
    assert matrix_rank_kernel(RatMatrix.identity(3)) == (3, [])
    r, ker = matrix_rank_kernel(RatMatrix.zeros(3))
    assert r == 0 and len(ker) == 3


def test_quadratic_form_examples():
    assert quadratic_form_matrix(R3("x^2+y^2+z^2")) == RatMatrix.identity(3)
    M = quadratic_form_matrix(P4("Z1*Z4 - Z2*Z3"))
    h = Fraction(1, 2)
    assert M[1, 4] == M[4, 1] == h and M[2, 3] == M[3, 2] == -h
    assert sum(1 for r in M.rows for v in r if v) == 4
    assert M.rank() == sym(M).rank() == 4
    M2 = quadratic_form_matrix(P4("(Z1+Z4)^2 - Z0*Z3"))
    assert M2.rank() == sym(M2).rank() == 3


def test_example1_coefficient_matrix():
    quads = [R3(s) for s in ("z^2", "-x*y", "-y^2", "x^2", "x*y", "0")]
    C = coefficient_matrix(quads, monomials_of_degree(3, 2))
    r, ker = matrix_rank_kernel(C.T)
    oracle = sym(C)
    assert r == oracle.rank() == 4
    assert len(ker) == 6 - oracle.rank() == 2


@given(matrices)
def test_rank_and_kernel_match_sympy(rows):
    M = RatMatrix(rows)
    S = sym(M)
    r, ker = matrix_rank_kernel(M)
    assert r == S.rank()
    assert len(ker) == M.shape[1] - r
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)
    red, piv = rref(rows)
    sred, spiv = S.rref()
    assert list(piv) == list(spiv)


@given(matrices, st.integers(0, 10**6))
def test_rank_invariance(rows, seed):
    M = RatMatrix(rows)
    rng = random.Random(seed)
    n = M.shape[0]
    while True:
        G = RatMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        if G.det():
            break
    assert M.T.rank() == M.rank() == (G @ M).rank()


@given(forms(2))
def test_quadratic_form_is_a_section_of_evaluation(q):
    M = quadratic_form_matrix(q)
    assert M.is_symmetric()
    assert form_from_matrix(M, R3) == q
    v = R3.gens()
    expanded = sum((v[i] * v[j] * M[i, j] for i in range(3) for j in range(3)), R3.zero())
    assert expanded == q


def test_inverse_and_det():
    M = RatMatrix([[2, 1], [1, 1]])
    assert M.det() == 1
    assert M @ M.inverse() == RatMatrix.identity(2)
    assert kernel([[1, 1, 0]], 3) == [[-1, 1, 0], [0, 0, 1]]
