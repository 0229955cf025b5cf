"""Sparse multivariate polynomials over the rationals.

A :class:`Poly` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients, attached to a :class:`Ring` that
fixes the variable names and the active monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple  # tuple[int, ...], one exponent per ring variable


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order: ``grevlex``, ``lex`` or ``elim`` (block order).

    ``elim`` with ``k`` compares the first ``k`` exponents by grevlex and
    breaks ties with grevlex on the rest, so any monomial involving one of
    the first ``k`` variables is larger than every monomial free of them.
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.k < 0:
            raise ValueError("elimination block size must be non-negative")

    @property
    def tag(self) -> str:
        return f"elim({self.k})" if self.kind == "elim" else self.kind

    def key(self, m: Monomial) -> tuple:
        """Sort key; a larger key means a larger monomial."""
        if self.kind == "lex":
            return m
        if self.kind == "grevlex":
            return (sum(m),) + tuple(-e for e in reversed(m))
        k = self.k
        head, tail = m[:k], m[k:]
        return ((sum(head),) + tuple(-e for e in reversed(head))
                + (sum(tail),) + tuple(-e for e in reversed(tail)))

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        text = text.strip()
        if text.startswith("elim(") and text.endswith(")"):
            return cls("elim", int(text[5:-1]))
        return cls(text)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


@dataclass(frozen=True)
class Ring:
    names: tuple
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.names, order)

    def gens(self) -> list["Poly"]:
        return [self.var(i) for i in range(self.nvars)]

    def var(self, i) -> "Poly":
        if isinstance(i, str):
            i = self.names.index(i)
        m = [0] * self.nvars
        m[i] = 1
        return Poly(self, {tuple(m): 1})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        return Poly(self, {(0,) * self.nvars: c})

    def __call__(self, text: str) -> "Poly":
        from .parse import parse_poly
        return parse_poly(text, self)


def ring(*names, order: MonomialOrder = GREVLEX) -> Ring:
    """``ring("x", "y", "z")`` or ``ring("x y z")``."""
    if len(names) == 1 and isinstance(names[0], str):
        names = names[0].replace(",", " ").split()
    elif len(names) == 1:
        names = tuple(names[0])
    return Ring(tuple(names), order)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not supported")
    return Fraction(c)


class Poly:
    """Immutable sparse polynomial with rational coefficients."""

    def __init__(self, ring: Ring, terms: Mapping | None = None):
        self.ring = ring
        clean = {}
        if terms:
            n = ring.nvars
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n:
                    raise ValueError(f"monomial {m} does not fit ring {ring.names}")
                c = _as_fraction(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
                    if not clean[m]:
                        del clean[m]
        self.terms = clean

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    # -- structure -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> list:
        """Terms in descending order under the ring's active order."""
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __iter__(self):
        return iter(self.sorted_terms())

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = self.ring.order.key
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degrees(self) -> set:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        if len(ds) != 1:
            return False
        return degree is None or ds == {degree}

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def coefficient(self, m) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def variables(self) -> set:
        """Indices of variables that actually occur."""
        out = set()
        for m in self.terms:
            out.update(i for i, e in enumerate(m) if e)
        return out

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring.names != self.ring.names:
                raise RingMismatch(f"{self.ring.names} vs {other.ring.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if not other:
                return self.ring.zero()
            return Poly._raw(self.ring, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / _as_fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    def mul_term(self, m: Monomial, c) -> "Poly":
        c = _as_fraction(c)
        if not c:
            return self.ring.zero()
        return Poly._raw(self.ring, {
            tuple(a + b for a, b in zip(mm, m)): cc * c for mm, cc in self.terms.items()
        })

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self * (1 / self.leading_coefficient())

    def primitive(self) -> "Poly":
        """Scale so the leading coefficient is positive and coefficients are coprime integers."""
        if not self.terms:
            return self
        from math import gcd, lcm
        den = 1
        for c in self.terms.values():
            den = lcm(den, c.denominator)
        nums = [int(c * den) for c in self.terms.values()]
        g = 0
        for v in nums:
            g = gcd(g, v)
        scale = Fraction(den, g)
        if self.leading_coefficient() < 0:
            scale = -scale
        return self * scale

    # -- calculus and composition ------------------------------------------
    def diff(self, var) -> "Poly":
        i = self.ring.names.index(var) if isinstance(var, str) else var
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] = e - 1
                out[tuple(mm)] = c * e
        return Poly._raw(self.ring, out)

    def substitute(self, images: Sequence["Poly"], target: Ring | None = None) -> "Poly":
        return substitute(self, images, target)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong arity")
        pt = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x ** e
            total += v
        return total

    def in_ring(self, ring: Ring) -> "Poly":
        """Same polynomial viewed in a ring with the same variables (e.g. other order)."""
        if ring.names != self.ring.names:
            raise RingMismatch(f"{self.ring.names} vs {ring.names}")
        return Poly._raw(ring, self.terms)

    def embed(self, ring: Ring) -> "Poly":
        """Map into a ring containing all of this ring's variable names."""
        idx = [ring.names.index(n) for n in self.ring.names]
        out = {}
        for m, c in self.terms.items():
            mm = [0] * ring.nvars
            for i, e in zip(idx, m):
                mm[i] = e
            out[tuple(mm)] = c
        return Poly._raw(ring, out)

    # -- printing ---------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, ring={list(self.ring.names)})"


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    """Canonical text: descending active order, ``p/q`` coefficients, ``q`` omitted when 1."""
    if not f.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(f.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m, f.ring.names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def substitute(f: Poly, images: Sequence[Poly], target: Ring | None = None) -> Poly:
    """Compose ``f`` with ``images`` (one polynomial per variable of ``f``'s ring)."""
    images = list(images)
    if len(images) != f.ring.nvars:
        raise ValueError(f"need {f.ring.nvars} images, got {len(images)}")
    if target is None:
        if not images:
            raise ValueError("target ring required for a ring without variables")
        target = images[0].ring
    for g in images:
        if g.ring.names != target.names:
            raise RingMismatch("substitution images live in different rings")
    powers: list[dict] = [dict() for _ in images]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = images[i] ** e
        return cache[e]

    acc: dict = {}
    for m, c in f.terms.items():
        term = target.const(c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        for mm, cc in term.terms.items():
            v = acc.get(mm, 0) + cc
            if v:
                acc[mm] = v
            else:
                del acc[mm]
    return Poly._raw(target, acc)


def jacobian_matrix(polys: Sequence[Poly]) -> list[list[Poly]]:
    """Entry ``[i][j]`` is the derivative of ``polys[i]`` by variable ``j``."""
    polys = list(polys)
    if not polys:
        return []
    r = polys[0].ring
    for p in polys:
        if p.ring.names != r.names:
            raise RingMismatch("jacobian of polynomials from different rings")
    return [[p.diff(j) for j in range(r.nvars)] for p in polys]


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All exponent tuples of length ``n`` and total degree ``d``, in descending lex order."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            out.append((e,) + rest)
    return out


def coefficient_matrix(polys: Iterable[Poly], monomials: Sequence[Monomial]):
    """Rows of coefficients of ``polys`` against a fixed monomial list."""
    from .linalg import RatMatrix
    index = {m: j for j, m in enumerate(monomials)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(monomials)
        for m, c in p.terms.items():
            if m not in index:
                raise ValueError(f"monomial {m} outside the supplied basis")
            row[index[m]] = c
        rows.append(row)
    return RatMatrix(rows)
