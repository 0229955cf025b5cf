"""Rank-2 bundles on P^2 given as cokernels of O(-1) -> O^2 + O(1).

A presentation is the triple of forms ``(A, B, Q)`` with ``deg A = deg B = 1``
and ``deg Q = 2``.  Global sections of the cokernel are represented by their
lifts ``(a, b, g)`` to ``O^2 + O(1)`` with ``a, b`` scalars and ``g`` linear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import Ideal, is_empty_projective
from .poly import Poly, Ring, ring

P2 = ring("x y z")


class PresentationError(ValueError):
    code = "INVALID_PRESENTATION"


class DegreeMismatch(PresentationError):
    code = "DEGREE_MISMATCH"


class CommonZero(PresentationError):
    code = "COMMON_ZERO"

    def __init__(self, message: str, witness: Ideal):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Presentation:
    A: Poly
    B: Poly
    Q: Poly

    @property
    def ring(self) -> Ring:
        return self.A.ring

    def forms(self) -> tuple[Poly, Poly, Poly]:
        return (self.A, self.B, self.Q)

    def twists(self) -> tuple[list[int], list[int]]:
        """Source and target twists of the defining map."""
        return [-1], [self.A.degree() - 1, self.B.degree() - 1, self.Q.degree() - 1]

    def __str__(self):
        return f"({self.A}, {self.B}, {self.Q})"


def make_presentation(A: Poly, B: Poly, Q: Poly) -> Presentation:
    """Validate ``(A, B, Q)``: degrees (1, 1, 2) and no common zero on P^2."""
    names = A.ring.names
    if len(names) != 3 or B.ring.names != names or Q.ring.names != names:
        raise DegreeMismatch("presentation forms must share one ring in three variables")
    for name, f, d in (("A", A, 1), ("B", B, 1), ("Q", Q, 2)):
        if not f or not f.is_homogeneous(d):
            raise DegreeMismatch(f"{name} must be a nonzero form of degree {d}, got {f}")
    I = Ideal(A.ring, [A, B, Q])
    if not is_empty_projective(I):
        raise CommonZero(f"A, B, Q share a zero on P^2: {A}, {B}, {Q}", I)
    return Presentation(A, B, Q)


def standard_presentation(R: Ring = P2) -> Presentation:
    """The presentation ``(x, y, z^2)``."""
    x, y, z = R.gens()
    return make_presentation(x, y, z**2)


@dataclass(frozen=True)
class ChernPair:
    c1: int
    c2: int

    def __iter__(self):
        return iter((self.c1, self.c2))


def chern_of_cokernel(twists_source: Sequence[int], twists_target: Sequence[int]) -> ChernPair:
    """Chern classes of ``coker(sum O(a) -> sum O(b))`` when the ranks differ by two."""
    if len(twists_target) - len(twists_source) != 2:
        raise ValueError("target rank minus source rank must be 2")

    def total(twists):
        c = [1, 0, 0]
        for a in twists:
            c = [c[0], c[1] + a * c[0], c[2] + a * c[1]]
        return c

    num = total(twists_target)
    den = total(twists_source)
    # invert den in Z[h]/(h^3); den[0] == 1
    inv = [1, -den[1], den[1] ** 2 - den[2]]
    c1 = num[1] + inv[1]
    c2 = num[2] + num[1] * inv[1] + inv[2]
    return ChernPair(c1, c2)


@dataclass(frozen=True)
class SectionE:
    """Global section ``(a, b, g)`` of ``O^2 + O(1)``."""

    a: Fraction
    b: Fraction
    g: Poly

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.g and not self.g.is_homogeneous(1):
            raise ValueError("third component of a section must be a linear form")

    def __add__(self, other: "SectionE") -> "SectionE":
        return SectionE(self.a + other.a, self.b + other.b, self.g + other.g)

    def scale(self, c) -> "SectionE":
        c = Fraction(c)
        return SectionE(self.a * c, self.b * c, self.g * c)

    def coordinates(self) -> list[Fraction]:
        """Coordinates in the basis returned by :func:`section_basis`."""
        R = self.g.ring
        return [self.a, self.b] + [self.g.coefficient(m) for m in _linear_monomials(R)]

    def __str__(self):
        return f"({self.a}, {self.b}, {self.g})"


def _linear_monomials(R: Ring):
    n = R.nvars
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def section_basis(P: Presentation | Ring | None = None) -> list[SectionE]:
    """The fixed basis ``(1,0,0), (0,1,0), (0,0,x), (0,0,y), (0,0,z)``."""
    R = P.ring if isinstance(P, Presentation) else (P or P2)
    x, y, z = R.gens()
    zero = R.zero()
    return [SectionE(1, 0, zero), SectionE(0, 1, zero),
            SectionE(0, 0, x), SectionE(0, 0, y), SectionE(0, 0, z)]


def section_combine(coeffs: Sequence, basis: Sequence[SectionE] | None = None) -> SectionE:
    basis = list(basis) if basis is not None else section_basis()
    if len(coeffs) != len(basis):
        raise ValueError("one coefficient per basis section expected")
    out = SectionE(0, 0, basis[0].g.ring.zero())
    for c, s in zip(coeffs, basis):
        if Fraction(c):
            out = out + s.scale(c)
    return out
