"""Coordinates on a linear subspace cut out by linear forms."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import rref
from .poly import Poly, Ring, substitute


class LinearSection:
    """The linear subspace ``{h = 0 for h in forms}`` of the projective space of ``ring``.

    Each form is solved for its *last* occurring variable; the surviving
    variables (in ring order) are the coordinates on the subspace.
    """

    def __init__(self, ring: Ring, forms: Sequence[Poly]):
        n = ring.nvars
        rows = []
        for h in forms:
            if h.ring.names != ring.names:
                raise ValueError("linear form outside the ring")
            if h and not h.is_homogeneous(1):
                raise ValueError(f"{h} is not a linear form")
            rows.append([h.coefficient(tuple(int(i == j) for j in range(n)))
                         for i in range(n)][::-1])
        rows = [r for r in rows if any(r)]
        red, piv = rref(rows) if rows else ([], [])
        self.ambient = ring
        # undo the column reversal: pivot columns are the last variables
        self.pivots = [n - 1 - p for p in piv]
        self.equations = [[row[n - 1 - i] for i in range(n)] for row in red]
        self.free = [i for i in range(n) if i not in self.pivots]
        self.ring = Ring(tuple(ring.names[i] for i in self.free), ring.order)

    @property
    def dimension(self) -> int:
        """Projective dimension of the subspace."""
        return len(self.free) - 1

    def forms(self) -> list[Poly]:
        n = self.ambient.nvars
        return [Poly(self.ambient, {tuple(int(i == j) for j in range(n)): c
                                    for i, c in enumerate(eq) if c})
                for eq in self.equations]

    def images(self) -> list[Poly]:
        """Each ambient variable written in the subspace coordinates."""
        R = self.ring
        out = [None] * self.ambient.nvars
        for k, i in enumerate(self.free):
            out[i] = R.var(k)
        for eq, p in zip(self.equations, self.pivots):
            # eq[p] == 1; Z_p = -sum_{free j} eq[j] Z_j
            expr = R.zero()
            for k, j in enumerate(self.free):
                if eq[j]:
                    expr = expr - R.var(k) * eq[j]
            out[p] = expr
        return out

    def restrict(self, f: Poly) -> Poly:
        return substitute(f, self.images(), self.ring)

    def lift(self, f: Poly) -> Poly:
        """Inclusion of the subspace coordinate ring's variables into the ambient ring."""
        return f.embed(self.ambient)

    def lift_point(self, pt: Sequence) -> list[Fraction]:
        vals = [Fraction(0)] * self.ambient.nvars
        for k, i in enumerate(self.free):
            vals[i] = Fraction(pt[k])
        for eq, p in zip(self.equations, self.pivots):
            vals[p] = -sum((eq[j] * vals[j] for j in self.free), Fraction(0))
        return vals
