"""Pencils of quadrics ``lam*M1 + mu*M2`` and their rank stratification."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import binary
from .groebner import Ideal, homogeneous_part, minimal_generators
from .linalg import RatMatrix, quadratic_form_matrix
from .poly import Poly
from .subspace import LinearSection


class PencilError(RuntimeError):
    code = "INTERNAL"


@dataclass(frozen=True)
class QuadricPencil:
    M1: RatMatrix
    M2: RatMatrix
    basis_labels: tuple = ()

    def __post_init__(self):
        if self.M1.shape != self.M2.shape or not self.M1.is_symmetric() or not self.M2.is_symmetric():
            raise ValueError("a pencil needs two symmetric matrices of the same size")

    @property
    def size(self) -> int:
        return self.M1.shape[0]

    def member(self, lam, mu) -> RatMatrix:
        return self.M1.scale(lam) + self.M2.scale(mu)

    def entry_form(self, i: int, j: int) -> list[Fraction]:
        """Entry ``(i, j)`` as a binary form of degree 1: ``[mu-coeff, lam-coeff]``."""
        return [self.M2[i, j], self.M1[i, j]]


@dataclass(frozen=True)
class RankStratum:
    rank: int
    point: tuple | None = None            # (lam, mu) for a rational member
    minimal_polynomial: tuple | None = None   # in t = lam/mu when the members are irrational

    def describe(self) -> str:
        if self.point is not None:
            return f"({self.point[0]}:{self.point[1]}) rank {self.rank}"
        terms = " + ".join(f"({c})*t^{i}" for i, c in enumerate(self.minimal_polynomial) if c)
        return f"roots of {terms} (t = lam/mu) rank {self.rank}"


def restrict_to_hyperplane(q: Poly, h: Poly) -> RatMatrix:
    """Matrix of ``q`` on the hyperplane ``h = 0``, in the surviving coordinates."""
    if not h:
        raise ValueError("hyperplane form is zero")
    return restrict_to_subspace(q, [h])


def restrict_to_subspace(q: Poly, forms: Sequence[Poly]) -> RatMatrix:
    if q and not q.is_homogeneous(2):
        raise ValueError("restriction needs a quadric")
    L = LinearSection(q.ring, forms)
    return quadratic_form_matrix(L.restrict(q))


def pencil_from_forms(q1: Poly, q2: Poly, hyperplanes: Sequence[Poly] = ()) -> QuadricPencil:
    L = LinearSection(q1.ring, hyperplanes)
    M1 = quadratic_form_matrix(L.restrict(q1))
    M2 = quadratic_form_matrix(L.restrict(q2))
    return QuadricPencil(M1, M2, (q1, q2))


def image_pencil(I: Ideal, hyperplanes: Sequence[Poly]) -> QuadricPencil:
    """The quadrics of ``I`` restricted to the linear space cut by ``hyperplanes``."""
    L = LinearSection(I.ring, hyperplanes)
    restricted = Ideal(L.ring, [L.restrict(g) for g in I.generators])
    quads = homogeneous_part(restricted, 2)
    if len(quads) != 2:
        raise PencilError(f"expected a pencil of quadrics, found {len(quads)} independent quadrics")
    # prefer the (sparser) minimal generators as the basis of the pencil
    mins = [g for g in minimal_generators(restricted) if g.degree() == 2]
    if len(mins) == 2:
        quads = mins
    q1, q2 = (q.primitive() for q in quads)
    return QuadricPencil(quadratic_form_matrix(q1), quadratic_form_matrix(q2), (q1, q2))


def _form_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _form_add(a: list, b: list, sign: int = 1) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(n)]


def _form_det(entries: list[list[list]], rows: Sequence[int], cols: Sequence[int]) -> list:
    """Determinant (binary form of degree ``len(rows)``) of the submatrix."""
    memo: dict = {}
    rows = list(rows)

    def rec(k: int, avail: tuple) -> list:
        if k == len(rows):
            return [Fraction(1)]
        key = (k, avail)
        if key in memo:
            return memo[key]
        total = [Fraction(0)]
        for pos, c in enumerate(avail):
            e = entries[rows[k]][c]
            if not any(e):
                continue
            sub = rec(k + 1, avail[:pos] + avail[pos + 1:])
            total = _form_add(total, _form_mul(e, sub), -1 if pos % 2 else 1)
        memo[key] = total
        return total

    out = rec(0, tuple(cols))
    d = len(rows)
    return (out + [Fraction(0)] * (d + 1))[:d + 1]


def _entries(P: QuadricPencil) -> list:
    n = P.size
    return [[P.entry_form(i, j) for j in range(n)] for i in range(n)]


def pencil_determinant(P: QuadricPencil) -> list[Fraction]:
    """``det(lam*M1 + mu*M2)`` as a binary form (coefficient of ``lam^i mu^(n-i)`` at index i)."""
    n = P.size
    return _form_det(_entries(P), range(n), range(n))


def minors(P: QuadricPencil, r: int) -> list[list[Fraction]]:
    n = P.size
    E = _entries(P)
    return [_form_det(E, rows, cols)
            for rows in combinations(range(n), r) for cols in combinations(range(n), r)]


def pencil_generic_rank(P: QuadricPencil, seed=0, samples: int = 2, max_samples: int = 8) -> int:
    """Rank of a random member, cross-checked at further random members."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    ranks = []

    def sample():
        while True:
            lam = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
            mu = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
            if lam or mu:
                return P.member(lam, mu).rank()

    for _ in range(samples):
        ranks.append(sample())
    while len(set(ranks)) > 1 and len(ranks) < max_samples:
        ranks.append(sample())
    if len(set(ranks)) > 1 and ranks.count(max(ranks)) < 2:
        raise PencilError(f"sampled ranks disagree persistently: {ranks}")
    return max(ranks)


def _rank_at(P: QuadricPencil, lam, mu) -> int:
    return P.member(lam, mu).rank()


def _split_by_rank(P: QuadricPencil, g: list, upper: int) -> list[tuple[int, list]]:
    """Split the square-free ``g`` (in ``t = lam/mu``) into factors of constant member rank."""
    pieces = []
    remaining = binary.monic(g)
    for s in range(upper - 1, 0, -1):
        if len(remaining) <= 1:
            break
        common = remaining
        for m in minors(P, s):
            common = binary.gcd_poly(common, m)
            if len(common) <= 1:
                break
        exact, _ = binary.divmod_poly(remaining, common)
        if len(binary.strip(exact)) > 1:
            pieces.append((s, binary.monic(exact)))
        remaining = binary.monic(common)
    if len(remaining) > 1:
        pieces.append((0, remaining))
    return pieces


def rank_strata(P: QuadricPencil, generic_rank: int | None = None, seed=0) -> list[RankStratum]:
    """Members of the pencil whose rank drops below the generic rank.

    The drop locus is the gcd of all ``r x r`` minors (``r`` the generic
    rank).  Rational members are reported exactly as ``(lam:mu)``; the
    remaining square-free cofactor (no rational roots) is reported by its
    polynomial in ``t = lam/mu``.
    """
    r = generic_rank if generic_rank is not None else pencil_generic_rank(P, seed)
    g, inf_mult = binary.binary_gcd(minors(P, r), r)
    if not g and not inf_mult:
        raise PencilError("all r-minors vanish identically: rank drops everywhere")
    strata = []
    if inf_mult:
        strata.append(RankStratum(_rank_at(P, 1, 0), point=(Fraction(1), Fraction(0))))
    sf = binary.squarefree_part(g)
    roots = binary.rational_roots(sf)
    for t in roots:
        strata.append(RankStratum(_rank_at(P, t, 1), point=(t, Fraction(1))))
        sf, _ = binary.divmod_poly(sf, [-t, Fraction(1)])
    if len(binary.strip(sf)) > 1:
        for rank, piece in _split_by_rank(P, sf, r):
            strata.append(RankStratum(rank, minimal_polynomial=tuple(piece)))
    return strata


def congruent(P: QuadricPencil, A: RatMatrix) -> QuadricPencil:
    """``A^T M A`` applied to both members."""
    return QuadricPencil(A.T @ P.M1 @ A, A.T @ P.M2 @ A, P.basis_labels)
