"""Morphisms P^2 -> Gr(2, C^4) in Plücker coordinates.

Four sections ``w1..w4`` of a presented bundle give six quadrics
``p_ij = det(w_i; w_j; (A, B, Q))`` (rows stacked as a 3x3 determinant),
taken in the order ``(p12, p13, p14, p23, p24, p34)`` and identified with
the coordinates ``Z0..Z5`` of P^5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .bundle import Presentation, SectionE, section_basis, section_combine
from .groebner import Ideal, is_empty_projective
from .linalg import RatMatrix, rref
from .poly import Poly, Ring, ring

PAIRS = tuple(combinations(range(4), 2))     # (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
P5 = ring("Z0 Z1 Z2 Z3 Z4 Z5")


class DependentSections(ValueError):
    code = "DEPENDENT_SECTIONS"


class NotSpanning(ValueError):
    """The constant parts of the sections do not span C^2 (special morphism)."""

    code = "NOT_SPANNING"


class PluckerIdentityFailure(AssertionError):
    code = "INTERNAL"


@dataclass(frozen=True)
class SectionQuadruple:
    sections: tuple
    coeff_matrix: RatMatrix          # 4x5, rows in the w-basis

    @classmethod
    def from_coefficients(cls, rows: Sequence[Sequence], R: Ring | None = None) -> "SectionQuadruple":
        rows = [[Fraction(c) for c in r] for r in rows]
        if len(rows) != 4 or any(len(r) != 5 for r in rows):
            raise ValueError("a quadruple needs four rows of five coefficients")
        M = RatMatrix(rows)
        if M.rank() != 4:
            raise DependentSections("the four sections are linearly dependent")
        basis = section_basis(R)
        return cls(tuple(section_combine(r, basis) for r in rows), M)

    @classmethod
    def from_sections(cls, sections: Sequence[SectionE]) -> "SectionQuadruple":
        return cls.from_coefficients([s.coordinates() for s in sections], sections[0].g.ring)


def wedge_quadric(u: SectionE, v: SectionE, P: Presentation) -> Poly:
    """``det`` of the rows ``(a_u, b_u, g_u)``, ``(a_v, b_v, g_v)``, ``(A, B, Q)``."""
    A, B, Q = P.forms()
    minor_ab = u.a * v.b - u.b * v.a
    return (Q * minor_ab
            - B * (v.g * u.a - u.g * v.a)
            + A * (v.g * u.b - u.g * v.b))


@dataclass(frozen=True)
class PluckerMap:
    quadrics: tuple
    ring: Ring

    def __iter__(self):
        return iter(self.quadrics)

    def __getitem__(self, i) -> Poly:
        return self.quadrics[i]

    def __len__(self):
        return len(self.quadrics)

    def strings(self) -> list[str]:
        return [str(q) for q in self.quadrics]

    @classmethod
    def from_polys(cls, polys: Sequence[Poly]) -> "PluckerMap":
        polys = tuple(polys)
        return cls(polys, polys[0].ring)


def plucker_identity(M: Sequence[Poly]) -> Poly:
    p12, p13, p14, p23, p24, p34 = M
    return p12 * p34 - p13 * p24 + p14 * p23


def plucker_map(S: SectionQuadruple, P: Presentation) -> PluckerMap:
    """The six wedge quadrics of the quadruple, checked against the Plücker identity."""
    if S.coeff_matrix.rank() != 4:
        raise DependentSections("the four sections are linearly dependent")
    w = S.sections
    quads = tuple(wedge_quadric(w[i], w[j], P) for i, j in PAIRS)
    if plucker_identity(quads):
        raise PluckerIdentityFailure("Plücker identity fails for the computed quadrics")
    return PluckerMap(quads, P.ring)


def generates_check(M: PluckerMap) -> bool:
    """True when the six quadrics have no common zero on P^2."""
    return is_empty_projective(Ideal(M.ring, [q for q in M.quadrics if q]))


@dataclass(frozen=True)
class NormalizedQuadruple:
    f1: Poly
    f2: Poly
    f3: Poly
    f4: Poly
    change_of_basis: RatMatrix

    @property
    def forms(self) -> tuple[Poly, Poly, Poly, Poly]:
        return (self.f1, self.f2, self.f3, self.f4)

    def sections(self) -> list[SectionE]:
        return [SectionE(1, 0, self.f1), SectionE(0, 1, self.f2),
                SectionE(0, 0, self.f3), SectionE(0, 0, self.f4)]


def normalize_sections(S: SectionQuadruple) -> NormalizedQuadruple:
    """Recombine the quadruple into ``(1,0,f1), (0,1,f2), (0,0,f3), (0,0,f4)``."""
    C = S.coeff_matrix
    aug = [list(r) + [Fraction(int(i == j)) for j in range(4)] for i, r in enumerate(C.rows)]
    red, pivots = rref(aug)
    if pivots[:2] != [0, 1]:
        raise NotSpanning("constant parts of the sections do not span a plane")
    if len(red) != 4 or any(p >= 5 for p in pivots):
        raise DependentSections("the four sections are linearly dependent")
    G = RatMatrix([row[5:] for row in red])
    R = S.sections[0].g.ring
    basis = section_basis(R)
    forms = [section_combine(row[:5], basis).g for row in red]
    return NormalizedQuadruple(*forms, change_of_basis=G)


def grassmann_relation(R: Ring = P5) -> Poly:
    """Quadric in ``Z0..Z5`` vanishing on every Plücker map: ``Z0*Z5 - Z1*Z4 + Z2*Z3``."""
    Z = R.gens()
    return Z[0] * Z[5] - Z[1] * Z[4] + Z[2] * Z[3]


def alternate_sign_relation(R: Ring = P5) -> Poly:
    """``Z0*Z5 + Z1*Z4 - Z2*Z3``, the sign variant that is not an identity in general."""
    Z = R.gens()
    return Z[0] * Z[5] + Z[1] * Z[4] - Z[2] * Z[3]
