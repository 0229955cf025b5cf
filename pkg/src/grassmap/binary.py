"""Binary forms in ``(lam, mu)`` as coefficient lists.

A binary form of degree ``d`` is stored as ``[c_0, ..., c_d]`` meaning
``sum c_i * lam^i * mu^(d-i)``.  Dehomogenizing at ``mu = 1`` gives the
univariate polynomial with the same coefficient list; roots at infinity
``(1:0)`` correspond to a drop in univariate degree.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def strip(p: Sequence) -> list[Fraction]:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def is_zero(p: Sequence) -> bool:
    return not strip(p)


def divmod_poly(a: Sequence, b: Sequence) -> tuple[list, list]:
    a, b = strip(a), strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] = c
        for i, bc in enumerate(b):
            r[i + shift] -= c * bc
        r = strip(r)
    return strip(q), r


def monic(p: Sequence) -> list[Fraction]:
    p = strip(p)
    if not p:
        return p
    return [c / p[-1] for c in p]


def gcd_poly(a: Sequence, b: Sequence) -> list[Fraction]:
    a, b = strip(a), strip(b)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def derivative(p: Sequence) -> list[Fraction]:
    return strip([c * i for i, c in enumerate(p)][1:])


def squarefree_part(p: Sequence) -> list[Fraction]:
    p = strip(p)
    if len(p) <= 1:
        return monic(p)
    g = gcd_poly(p, derivative(p))
    q, _ = divmod_poly(p, g)
    return monic(q)


def evaluate(p: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(strip(p)):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def rational_roots(p: Sequence) -> list[Fraction]:
    """Distinct rational roots by the rational root theorem."""
    p = strip(p)
    if len(p) <= 1:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        k = next(i for i, c in enumerate(ints) if c)
        ints = ints[k:]
    if len(ints) > 1:
        for a in _divisors(ints[0]):
            for b in _divisors(ints[-1]):
                for s in (1, -1):
                    r = Fraction(s * a, b)
                    if r not in roots and evaluate(ints, r) == 0:
                        roots.append(r)
    return sorted(roots)


def binary_gcd(forms: Sequence[Sequence], degree: int | None = None) -> tuple[list, int]:
    """GCD of binary forms: ``(dehomogenized gcd, multiplicity of the root (1:0))``.

    ``degree`` is the common degree of the forms (all inputs must be forms of
    that degree; missing top coefficients mean factors of ``mu``).
    """
    forms = [list(f) for f in forms]
    nonzero = [f for f in forms if strip(f)]
    if not nonzero:
        return [], 0
    if degree is None:
        degree = max(len(f) for f in forms) - 1
    g: list = []
    inf_mult = None
    for f in nonzero:
        sf = strip(f)
        inf_mult = degree - (len(sf) - 1) if inf_mult is None else min(inf_mult, degree - (len(sf) - 1))
        g = gcd_poly(g, sf) if g else monic(sf)
    return g, inf_mult
