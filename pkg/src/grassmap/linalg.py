"""Exact linear algebra over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import Poly


class RatMatrix:
    """Dense immutable matrix of Fractions."""

    def __init__(self, rows: Sequence[Sequence]):
        rows = [tuple(Fraction(v) for v in r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.rows = tuple(rows)

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "RatMatrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.rows)
        return f"RatMatrix([{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(list(zip(*self.rows)))

    T = property(transpose)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix([[a * c for a in r] for r in self.rows])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        return RatMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                          for r in self.rows])

    def apply(self, v: Sequence) -> list[Fraction]:
        return [sum((a * Fraction(b) for a, b in zip(r, v)), Fraction(0)) for r in self.rows]

    def is_symmetric(self) -> bool:
        n, m = self.shape
        return n == m and all(self.rows[i][j] == self.rows[j][i]
                              for i in range(n) for j in range(i))

    def rank(self) -> int:
        return len(rref(self.rows)[1])

    def det(self) -> Fraction:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.rows]
        sign = 1
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                sign = -sign
            for r in range(col + 1, n):
                if a[r][col]:
                    f = a[r][col] / a[col][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        d = Fraction(sign)
        for i in range(n):
            d *= a[i][i]
        return d

    def inverse(self) -> "RatMatrix":
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        red, pivots = rref(aug)
        if pivots[:n] != list(range(n)) or len([p for p in pivots if p < n]) != n:
            raise ZeroDivisionError("matrix is singular")
        return RatMatrix([row[n:] for row in red[:n]])


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = [[Fraction(v) for v in r] for r in rows]
    if not a:
        return [], []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def kernel(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column (free entry 1)."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def matrix_rank_kernel(M: RatMatrix) -> tuple[int, list[list[Fraction]]]:
    """Exact rank and canonical right-kernel basis of ``M``."""
    red, pivots = rref(M.rows)
    return len(pivots), kernel(M.rows, M.shape[1])


def row_space(rows: Sequence[Sequence]) -> list[tuple]:
    """Canonical basis (reduced echelon rows) of the row space."""
    return [tuple(r) for r in rref(rows)[0]]


def quadratic_form_matrix(q: Poly) -> RatMatrix:
    """Symmetric matrix ``M`` with ``q = v^T M v``; off-diagonal entries are half the mixed coefficients."""
    n = q.ring.nvars
    if q and not q.is_homogeneous(2):
        raise ValueError("quadratic_form_matrix needs a homogeneous quadric")
    M = [[Fraction(0)] * n for _ in range(n)]
    for m, c in q.terms.items():
        idx = [i for i, e in enumerate(m) for _ in range(e)]
        i, j = idx
        if i == j:
            M[i][i] += c
        else:
            M[i][j] += c / 2
            M[j][i] += c / 2
    return RatMatrix(M)


def form_from_matrix(M: RatMatrix, ring) -> Poly:
    """Inverse of :func:`quadratic_form_matrix`."""
    n = ring.nvars
    if M.shape != (n, n):
        raise ValueError("matrix size does not match ring")
    v = ring.gens()
    total = ring.zero()
    for i in range(n):
        for j in range(n):
            if M[i, j]:
                total = total + v[i] * v[j] * M[i, j]
    return total
