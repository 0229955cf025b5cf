import pytest
from hypothesis import given, strategies as st

from conftest import R3, forms
from grassmap import (ChernPair, CommonZero, DegreeMismatch, Ideal, chern_of_cokernel,
                      is_empty_projective, make_presentation, section_basis, section_combine,
                      standard_presentation)
from grassmap.bundle import SectionE
from grassmap.linalg import RatMatrix

x, y, z = R3.gens()


def test_presentations():
    P = standard_presentation()
    assert str(P) == "(x, y, z^2)"
    with pytest.raises(CommonZero) as e:
        make_presentation(x, y, x * z)
    assert e.value.code == "COMMON_ZERO"
    assert not is_empty_projective(e.value.witness)
    # (x, x, z^2) vanishes at (0:1:0)
    assert all(f.evaluate((0, 1, 0)) == 0 for f in (x, x, z**2))
    with pytest.raises(CommonZero):
        make_presentation(x, x, z**2)
    with pytest.raises(DegreeMismatch):
        make_presentation(x, y, z)
    with pytest.raises(DegreeMismatch):
        make_presentation(x * y, y, z**2)


def test_chern_examples():
    assert chern_of_cokernel([-1], [0, 0, 1]) == ChernPair(2, 2)
    assert tuple(chern_of_cokernel(*standard_presentation().twists())) == (2, 2)
    for d in range(1, 6):
        c1, c2 = chern_of_cokernel([-d], [0, 0, 0])
        assert (c1, c2) == (d, d * d)
        assert c2 == c1**2
    assert tuple(chern_of_cokernel([], [0, 4])) == (4, 0)
    with pytest.raises(ValueError):
        chern_of_cokernel([-1], [0, 0])


def test_whitney_identity():
    c1, c2 = chern_of_cokernel([-1], [0, 0, 1])
    # (1 - h)(1 + c1 h + c2 h^2) == 1 + h  in Z[h]/(h^3)
    prod = [1, c1 - 1, c2 - c1]
    assert prod == [1, 1, 0]


def test_section_basis():
    B = section_basis(standard_presentation())
    assert len(B) == 5
    assert B[2] == SectionE(0, 0, x)
    assert RatMatrix([b.coordinates() for b in B]).rank() == 5


def test_section_combine():
    assert section_combine([0, 0, 0, 1, -1]) == SectionE(0, 0, y - z)
    for d in (1, 3, -2):
        assert section_combine([0, 0, 1, d, 0]) == SectionE(0, 0, x + y * d)
    s = section_combine([0] * 5)
    assert s.a == s.b == 0 and s.g.is_zero()


@given(forms(1), forms(1), forms(2))
def test_validation_soundness(A, B, Q):
    ok = bool(A) and bool(B) and bool(Q) and is_empty_projective(Ideal(R3, [A, B, Q]))
    try:
        make_presentation(A, B, Q)
        accepted = True
    except (CommonZero, DegreeMismatch):
        accepted = False
    assert accepted == ok
