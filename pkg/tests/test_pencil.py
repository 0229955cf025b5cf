import random
from fractions import Fraction

import pytest
import sympy

from grassmap import (QuadricPencil, RatMatrix, pencil_determinant, pencil_from_forms,
                      pencil_generic_rank, rank_strata, ring)
from grassmap.binary import strip
from grassmap.linalg import quadratic_form_matrix
from grassmap.pencil import congruent, restrict_to_hyperplane

P5 = ring("Z0 Z1 Z2 Z3 Z4 Z5")
Q1 = P5("Z1*Z4 - Z2*Z3")
Q2 = P5("(Z1+Z4)^2 - Z0*Z3")
H = P5("Z5")


def sym(M):
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in M.rows])


def test_restriction():
    assert restrict_to_hyperplane(Q1, H).rank() == 4
    assert restrict_to_hyperplane(Q2, H).rank() == 3
    assert restrict_to_hyperplane(H * P5("Z0 + Z2"), H) == RatMatrix.zeros(5)
    with pytest.raises(ValueError):
        restrict_to_hyperplane(Q1, P5.zero())


def test_example_pencil():
    pen = pencil_from_forms(Q1, Q2, [H])
    assert not strip(pencil_determinant(pen))
    lam, mu = sympy.symbols("lam mu")
    assert sympy.expand((lam * sym(pen.M1) + mu * sym(pen.M2)).det()) == 0
    assert pencil_generic_rank(pen) == 4
    strata = rank_strata(pen)
    assert {s.point for s in strata} == {(0, 1), (Fraction(-4), 1)}
    assert all(s.rank == 3 for s in strata)
    # oracle: the member at each reported point has rank 3 (sympy)
    for s in strata:
        l, m = s.point
        assert (l * sym(pen.M1) + m * sym(pen.M2)).rank() == 3


def test_constant_pencil():
    M = quadratic_form_matrix(ring("a b c")("a^2 + b*c"))
    pen = QuadricPencil(M, M)
    assert pencil_generic_rank(pen) == 3
    assert rank_strata(pen) == [] or all(s.point == (-1, 1) for s in rank_strata(pen))


def test_diagonal_pencil():
    pen = QuadricPencil(RatMatrix.diag([1, 1, 1, 1, 0]), RatMatrix.diag([0, 1, 1, 1, 1]))
    assert pencil_generic_rank(pen) == 5
    got = {s.point: s.rank for s in rank_strata(pen)}
    # det = lam * (lam + mu)^3 * mu
    assert got == {(1, 0): 4, (0, 1): 4, (-1, 1): 2}


def test_generic_synthetic_pencil():
    rng = random.Random(4)
    def sym_rand():
        A = [[Fraction(rng.randint(-5, 5)) for _ in range(5)] for _ in range(5)]
        return RatMatrix([[A[i][j] + A[j][i] for j in range(5)] for i in range(5)])
    pen = QuadricPencil(sym_rand(), sym_rand())
    assert pencil_generic_rank(pen) == 5
    assert strip(pencil_determinant(pen))
    lam = sympy.Symbol("lam")
    oracle = sympy.Poly((lam * sym(pen.M1) + sym(pen.M2)).det(), lam)
    ours = pencil_determinant(pen)
    assert [sympy.Rational(c.numerator, c.denominator) for c in ours] == list(reversed(oracle.all_coeffs()))


def test_irrational_strata_reported_by_polynomial():
    # det [[lam, mu], [mu, 2 lam]] = 2 lam^2 - mu^2: rank 1 where t^2 = 1/2
    pen = QuadricPencil(RatMatrix.diag([1, 2]), RatMatrix([[0, 1], [1, 0]]))
    strata = rank_strata(pen)
    assert len(strata) == 1 and strata[0].point is None
    assert list(strata[0].minimal_polynomial) == [Fraction(-1, 2), 0, 1]
    assert strata[0].rank == 1 and "rank 1" in strata[0].describe()


def test_congruence_invariance():
    pen = pencil_from_forms(Q1, Q2, [H])
    rng = random.Random(9)
    while True:
        A = RatMatrix([[rng.randint(-3, 3) for _ in range(5)] for _ in range(5)])
        if A.det():
            break
    pen2 = congruent(pen, A)
    assert pencil_generic_rank(pen2) == pencil_generic_rank(pen)
    assert {(s.point, s.rank) for s in rank_strata(pen2)} == {(s.point, s.rank) for s in rank_strata(pen)}


def test_matrix_form_consistency():
    pen = pencil_from_forms(Q1, Q2, [H])
    R = ring("Z0 Z1 Z2 Z3 Z4")
    v = R.gens()
    lam, mu = Fraction(3, 2), Fraction(-5)
    M = pen.member(lam, mu)
    form = sum((v[i] * v[j] * M[i, j] for i in range(5) for j in range(5)), R.zero())
    direct = R("3/2*(Z1*Z4 - Z2*Z3) - 5*((Z1+Z4)^2 - Z0*Z3)")
    assert form == direct
