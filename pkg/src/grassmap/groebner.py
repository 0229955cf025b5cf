"""Gröbner bases, elimination, saturation and Hilbert data.

Buchberger's algorithm with the Gebauer-Möller pair criteria and sugar
selection.  Coefficients are carried as ``gmpy2.mpq`` inside the engine and
converted back to :class:`fractions.Fraction` at the boundary.
"""

from __future__ import annotations

import contextlib
import contextvars
import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from gmpy2 import mpq

from .linalg import rref
from .poly import GREVLEX, MonomialOrder, Poly, Ring, monomials_of_degree

DEFAULT_MAX_STEPS = 10**6

_max_steps: contextvars.ContextVar[int] = contextvars.ContextVar("max_steps", default=DEFAULT_MAX_STEPS)
_stats: contextvars.ContextVar["GBStats | None"] = contextvars.ContextVar("gb_stats", default=None)


class ResourceLimitExceeded(RuntimeError):
    """Raised when a Gröbner computation exceeds its reduction-step cap."""

    code = "RESOURCE_LIMIT"


@dataclass
class GBStats:
    bases: int = 0
    reductions: int = 0
    pairs: int = 0
    max_basis_size: int = 0

    def as_dict(self) -> dict:
        return {"bases": self.bases, "reductions": self.reductions,
                "pairs": self.pairs, "max_basis_size": self.max_basis_size}


@contextlib.contextmanager
def resource_limit(max_steps: int):
    """Cap reduction steps for every Gröbner computation in this context."""
    token = _max_steps.set(int(max_steps))
    try:
        yield
    finally:
        _max_steps.reset(token)


@contextlib.contextmanager
def collect_stats():
    stats = GBStats()
    token = _stats.set(stats)
    try:
        yield stats
    finally:
        _stats.reset(token)


# ---------------------------------------------------------------------------
# engine

def _heap_key_fn(order: MonomialOrder):
    """Key whose *smallest* value is the largest monomial (for heapq)."""
    if order.kind == "grevlex":
        return lambda m: (-sum(m),) + m[::-1]
    if order.kind == "lex":
        return lambda m: tuple(-e for e in m)
    k = order.k

    def key(m):
        h, t = m[:k], m[k:]
        return (-sum(h),) + h[::-1] + (-sum(t),) + t[::-1]
    return key


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Engine:
    def __init__(self, order: MonomialOrder):
        self.order = order
        self.key = order.key
        self.hkey = _heap_key_fn(order)
        self.steps = 0
        self.max_steps = _max_steps.get()
        self.stats = _stats.get()

    def _tick(self):
        self.steps += 1
        if self.steps > self.max_steps:
            raise ResourceLimitExceeded(
                f"Gröbner computation exceeded {self.max_steps} reduction steps")

    def lm(self, f: dict):
        return max(f, key=self.key)

    def reduce(self, f: dict, basis: list) -> dict:
        """Full reduction of ``f`` by monic ``basis`` entries ``(lm, poly)``."""
        f = dict(f)
        hkey = self.hkey
        heap = [(hkey(m), m) for m in f]
        heapq.heapify(heap)
        rem = {}
        divcache: dict = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            if m in divcache:
                g = divcache[m]
            else:
                g = None
                for lm_g, poly_g in basis:
                    if _divides(lm_g, m):
                        g = (lm_g, poly_g)
                        break
                divcache[m] = g
            if g is None:
                rem[m] = c
                continue
            self._tick()
            lm_g, poly_g = g
            shift = tuple(a - b for a, b in zip(m, lm_g))
            for mg, cg in poly_g.items():
                if mg == lm_g:
                    continue
                mm = tuple(a + b for a, b in zip(mg, shift))
                v = f.get(mm)
                if v is None:
                    f[mm] = -c * cg
                    heapq.heappush(heap, (hkey(mm), mm))
                else:
                    v = v - c * cg
                    if v:
                        f[mm] = v
                    else:
                        del f[mm]
        return rem

    def monic(self, f: dict):
        lm = self.lm(f)
        inv = 1 / f[lm]
        return lm, {m: c * inv for m, c in f.items()}

    def spoly(self, a, b):
        lm_a, fa = a
        lm_b, fb = b
        l = _lcm(lm_a, lm_b)
        sa = tuple(x - y for x, y in zip(l, lm_a))
        sb = tuple(x - y for x, y in zip(l, lm_b))
        out = {}
        for m, c in fa.items():
            out[tuple(x + y for x, y in zip(m, sa))] = c
        for m, c in fb.items():
            mm = tuple(x + y for x, y in zip(m, sb))
            v = out.get(mm, 0) - c
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
        return out

    def groebner(self, gens: list[dict]) -> list[tuple]:
        polys: list[tuple] = []      # (lm, poly) monic
        sugar: list[int] = []
        active: list[int] = []
        pairs: list[tuple] = []      # (sugar, key(lcm), i, j, lcm)

        def update(h: int):
            lm_h = polys[h][0]
            cands = list(active)
            lcm_h = {g: _lcm(lm_h, polys[g][0]) for g in cands}
            keep = []
            while cands:
                g = cands.pop()
                lg = lcm_h[g]
                if _coprime(lm_h, polys[g][0]) or not any(
                        _divides(lcm_h[o], lg) for o in cands + keep):
                    keep.append(g)
            new_pairs = []
            for g in keep:
                if _coprime(lm_h, polys[g][0]):
                    continue
                l = lcm_h[g]
                s = max(sugar[g] + sum(l) - sum(polys[g][0]),
                        sugar[h] + sum(l) - sum(lm_h))
                new_pairs.append((s, self.key(l), g, h, l))
            survivors = []
            for p in pairs:
                _, _, i, j, l = p
                if (_divides(lm_h, l) and _lcm(polys[i][0], lm_h) != l
                        and _lcm(polys[j][0], lm_h) != l):
                    continue
                survivors.append(p)
            pairs[:] = survivors + new_pairs
            active[:] = [g for g in active if not _divides(lm_h, polys[g][0])] + [h]
            if self.stats is not None:
                self.stats.max_basis_size = max(self.stats.max_basis_size, len(active))

        def add(f: dict, s: int):
            polys.append(self.monic(f))
            sugar.append(s)
            update(len(polys) - 1)

        for f in sorted(gens, key=lambda g: self.key(self.lm(g))):
            h = self.reduce(f, [polys[i] for i in active])
            if h:
                add(h, max(sum(m) for m in f))

        while pairs:
            best = min(range(len(pairs)), key=lambda t: (pairs[t][0], pairs[t][1]))
            s, _, i, j, _ = pairs.pop(best)
            if self.stats is not None:
                self.stats.pairs += 1
            sp = self.spoly(polys[i], polys[j])
            if not sp:
                continue
            h = self.reduce(sp, [polys[t] for t in active])
            if h:
                add(h, s)

        # reduced basis
        basis = [polys[i] for i in active]
        basis.sort(key=lambda t: self.key(t[0]))
        minimal = []
        for idx, (lm, f) in enumerate(basis):
            if any(_divides(o[0], lm) for o in minimal):
                continue
            minimal.append((lm, f))
        out = []
        for idx, (lm, f) in enumerate(minimal):
            others = minimal[:idx] + minimal[idx + 1:]
            tail = {m: c for m, c in f.items() if m != lm}
            red = self.reduce(tail, others) if tail else {}
            red[lm] = mpq(1)
            out.append((lm, red))
        out.sort(key=lambda t: self.key(t[0]))
        if self.stats is not None:
            self.stats.bases += 1
            self.stats.reductions += self.steps
        return out


def _to_engine(p: Poly) -> dict:
    return {m: mpq(c.numerator, c.denominator) for m, c in p.terms.items()}


def _from_engine(ring: Ring, f: dict) -> Poly:
    return Poly._raw(ring, {m: Fraction(int(c.numerator), int(c.denominator))
                            for m, c in f.items() if c})


# ---------------------------------------------------------------------------
# ideals

class Ideal:
    """Finitely generated ideal with a write-once Gröbner basis cache per order."""

    def __init__(self, ring: Ring, generators: Iterable[Poly] = ()):
        gens = []
        for g in generators:
            if g.ring.names != ring.names:
                raise ValueError("generator outside the ideal's ring")
            if g:
                gens.append(g.in_ring(ring))
        self.ring = ring
        self.generators = tuple(gens)
        self._gb: dict = {}

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]}, ring={list(self.ring.names)})"

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def with_ring(self, ring: Ring) -> "Ideal":
        return Ideal(ring, [g.in_ring(ring) for g in self.generators])

    def groebner(self, order: MonomialOrder | None = None) -> list[Poly]:
        return groebner_basis(self, order)

    def cached_basis(self, order: MonomialOrder | None = None):
        order = order or self.ring.order
        return self._gb.get(order.tag)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring.names != self.ring.names:
            raise ValueError("ring mismatch")
        return Ideal(self.ring, self.generators + other.generators)

    def contains(self, f: Poly) -> bool:
        return not normal_form(f, self)

    def is_unit(self) -> bool:
        gb = groebner_basis(self)
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators


def groebner_basis(I: Ideal, order: MonomialOrder | None = None) -> list[Poly]:
    """Unique reduced Gröbner basis of ``I`` (monic, sorted by increasing leading monomial)."""
    order = order or I.ring.order
    cached = I._gb.get(order.tag)
    if cached is not None:
        return list(cached)
    ring = I.ring.with_order(order)
    engine = _Engine(order)
    gb = engine.groebner([_to_engine(g) for g in I.generators])
    result = tuple(_from_engine(ring, f) for _, f in gb)
    I._gb.setdefault(order.tag, result)
    return list(I._gb[order.tag])


def normal_form(f: Poly, I: Ideal, order: MonomialOrder | None = None) -> Poly:
    """Remainder of ``f`` modulo the reduced Gröbner basis of ``I``."""
    order = order or I.ring.order
    if f.ring.names != I.ring.names:
        raise ValueError("polynomial outside the ideal's ring")
    gb = groebner_basis(I, order)
    engine = _Engine(order)
    basis = [(g.leading_monomial(), _to_engine(g)) for g in gb]
    rem = engine.reduce(_to_engine(f), basis)
    return _from_engine(f.ring, rem)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring.names != J.ring.names:
        raise ValueError("ring mismatch")
    return groebner_basis(I, GREVLEX) == groebner_basis(J.with_ring(I.ring), GREVLEX)


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True when every generator of ``J`` lies in ``I``."""
    return all(not normal_form(g.in_ring(I.ring), I) for g in J.generators)


def eliminate(I: Ideal, k: int) -> Ideal:
    """``I`` intersected with the subring of the variables after the first ``k``."""
    n = I.ring.nvars
    if not 0 <= k <= n:
        raise ValueError("cannot eliminate more variables than the ring has")
    if k == 0:
        return I
    order = MonomialOrder("elim", k)
    gb = groebner_basis(I, order)
    sub = Ring(I.ring.names[k:], GREVLEX)
    keep = []
    for g in gb:
        if all(not any(m[:k]) for m in g.terms):
            keep.append(Poly._raw(sub, {m[k:]: c for m, c in g.terms.items()}))
    return Ideal(sub, keep)


def _fresh_name(ring: Ring, base: str = "t") -> str:
    name = base
    i = 0
    while name in ring.names:
        i += 1
        name = f"{base}{i}"
    return name


def _with_aux(ring: Ring) -> Ring:
    return Ring((_fresh_name(ring, "_t"),) + ring.names, ring.order)


def saturate_by(I: Ideal, f: Poly) -> Ideal:
    """``(I : f^inf)`` via an auxiliary variable ``t`` and the generator ``1 - t*f``."""
    if not f:
        return Ideal(I.ring, [I.ring.one()])
    big = _with_aux(I.ring)
    t = big.var(0)
    gens = [g.embed(big) for g in I.generators] + [big.one() - t * f.embed(big)]
    out = eliminate(Ideal(big, gens), 1)
    return out.with_ring(I.ring)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    big = _with_aux(I.ring)
    t = big.var(0)
    gens = [t * g.embed(big) for g in I.generators]
    gens += [(big.one() - t) * g.embed(big) for g in J.generators]
    return eliminate(Ideal(big, gens), 1).with_ring(I.ring)


def saturate(I: Ideal, J: Ideal) -> Ideal:
    """``(I : J^inf)``: intersection of the saturations by each generator of ``J``."""
    if J.ring.names != I.ring.names:
        raise ValueError("ring mismatch")
    gens = [g for g in J.generators if g]
    if not gens:
        return Ideal(I.ring, [I.ring.one()])
    result = None
    for g in gens:
        s = saturate_by(I, g.in_ring(I.ring))
        result = s if result is None else intersect(result, s)
    return result


def irrelevant_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, ring.gens())


def minimal_generators(I: Ideal) -> list[Poly]:
    """Minimal homogeneous generators drawn from the reduced grevlex basis."""
    if not I.is_homogeneous():
        raise ValueError("minimal generators need a homogeneous ideal")
    gb = sorted(groebner_basis(I, GREVLEX), key=lambda g: g.degree())
    chosen: list[Poly] = []
    for g in gb:
        if chosen and normal_form(g, Ideal(I.ring, chosen), GREVLEX).is_zero():
            continue
        chosen.append(g)
    return chosen


def homogeneous_part(I: Ideal, d: int) -> list[Poly]:
    """Canonical basis (reduced echelon in the monomial basis) of the degree-``d`` forms in ``I``."""
    if not I.is_homogeneous():
        raise ValueError("homogeneous part of an inhomogeneous ideal")
    ring = I.ring
    gb = groebner_basis(I, GREVLEX)
    mons = monomials_of_degree(ring.nvars, d)
    index = {m: j for j, m in enumerate(mons)}
    rows = []
    for g in gb:
        e = g.degree()
        if e > d:
            continue
        for s in monomials_of_degree(ring.nvars, d - e):
            row = [Fraction(0)] * len(mons)
            for m, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(m, s))]] = c
            rows.append(row)
    if not rows:
        return []
    red, _ = rref(rows)
    ring = ring.with_order(GREVLEX)
    return [Poly(ring, {mons[j]: c for j, c in enumerate(r) if c}) for r in red]


# ---------------------------------------------------------------------------
# Hilbert series

@dataclass(frozen=True)
class HilbertData:
    projective_dimension: int
    degree: int | None
    hilbert_polynomial: tuple          # ascending Fraction coefficients in s
    numerator: tuple = field(default=())  # h-vector: HS = h(t) / (1-t)^(dim+1)

    def hilbert_value(self, s: int) -> Fraction:
        return sum((c * s**i for i, c in enumerate(self.hilbert_polynomial)), Fraction(0))

    def hilbert_poly(self) -> Poly:
        R = Ring(("s",))
        return Poly(R, {(i,): c for i, c in enumerate(self.hilbert_polynomial) if c})


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _minimalize(gens) -> tuple:
    gens = sorted(set(gens), key=sum)
    out = []
    for m in gens:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


@lru_cache(maxsize=4096)
def _hs_numerator(gens: tuple) -> tuple:
    """Numerator N(t) of the Hilbert series of S/(gens), S with len(gens[0]) variables."""
    if not gens:
        return (1,)
    n = len(gens[0])
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    pairwise_disjoint = sum(len(s) for s in supports) == len(frozenset().union(*supports))
    if pairwise_disjoint:
        out = [1]
        for m in gens:
            d = sum(m)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1]) if d else [0]
        return tuple(out)
    counts = [0] * n
    for m in gens:
        for i, e in enumerate(m):
            if e:
                counts[i] += 1
    v = max(range(n), key=lambda i: counts[i])
    pivot = tuple(int(i == v) for i in range(n))
    left = _minimalize(gens + (pivot,))
    right = _minimalize(tuple(tuple(max(e - p, 0) for e, p in zip(m, pivot)) for m in gens))
    a = list(_hs_numerator(left))
    b = [0] + list(_hs_numerator(right))
    return tuple(_poly_add(a, b))


def _strip(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def hilbert_data(I: Ideal) -> HilbertData:
    """Projective dimension, degree and Hilbert polynomial of ``S/I`` for homogeneous ``I``."""
    if not I.is_homogeneous():
        raise ValueError("hilbert_data needs a homogeneous ideal")
    n = I.ring.nvars
    gb = groebner_basis(I, GREVLEX)
    lead = _minimalize(tuple(g.leading_monomial() for g in gb)) if gb else ()
    num = _strip(_hs_numerator(lead) if lead else (1,))
    if not num:
        return HilbertData(-1, None, (), ())
    k = 0
    while sum(num) == 0:
        # divide by (1 - t)
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = _strip(q)
        k += 1
    krull = n - k
    if krull <= 0:
        return HilbertData(-1, None, (), tuple(num))
    deg = sum(num)
    d = krull
    # HP(s) = sum_i h_i * binom(s - i + d - 1, d - 1)
    hp = [Fraction(0)] * d
    for i, h in enumerate(num):
        if not h:
            continue
        poly = [Fraction(1)]
        for j in range(d - 1):
            poly = _poly_mul(poly, [Fraction(d - 1 - i - j), Fraction(1)])
        scale = Fraction(h, factorial(d - 1))
        for e, c in enumerate(poly):
            hp[e] += c * scale
    return HilbertData(d - 1, int(deg), tuple(hp), tuple(num))


def is_empty_projective(I: Ideal) -> bool:
    return hilbert_data(I).projective_dimension < 0



def in_radical(f: Poly, I: Ideal) -> bool:
    """Radical membership: ``f`` vanishes on ``V(I)`` iff ``1`` lies in ``I + (1 - t*f)``."""
    big = _with_aux(I.ring)
    t = big.var(0)
    gens = [g.embed(big) for g in I.generators] + [big.one() - t * f.embed(big)]
    gb = groebner_basis(Ideal(big, gens), GREVLEX)
    return len(gb) == 1 and gb[0].is_constant()
