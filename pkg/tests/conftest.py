from fractions import Fraction

import sympy
from hypothesis import settings, strategies as st

from grassmap import Poly, ring

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

R3 = ring("x y z")

small_fracs = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
monomials3 = st.tuples(*[st.integers(0, 3)] * 3)


@st.composite
def polys(draw, R=R3, max_terms=5):
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, 3)] * R.nvars), small_fracs,
                                 max_size=max_terms))
    return Poly(R, terms)


@st.composite
def forms(draw, d, R=R3):
    from grassmap.poly import monomials_of_degree
    mons = monomials_of_degree(R.nvars, d)
    coeffs = draw(st.lists(small_fracs, min_size=len(mons), max_size=len(mons)))
    return Poly(R, dict(zip(mons, coeffs)))


def to_sympy(f: Poly):
    """Independent oracle representation of ``f``."""
    syms = sympy.symbols(f.ring.names)
    expr = sympy.Integer(0)
    for m, c in f.terms.items():
        t = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, m):
            t *= s**e
        expr += t
    return sympy.Poly(expr, *syms)


def random_small_ideal(rng, R=R3, ngens=(2, 3), max_deg=3, max_terms=3, homogeneous=None):
    """Seeded random ideal with a few sparse generators of low degree."""
    from grassmap import Ideal
    from grassmap.poly import monomials_of_degree
    if homogeneous is None:
        homogeneous = rng.random() < 0.5
    gens = []
    for _ in range(rng.randint(*ngens)):
        d = rng.randint(1, max_deg)
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            e = d if homogeneous else rng.randint(0, d)
            m = rng.choice(monomials_of_degree(R.nvars, e))
            terms[m] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
        g = Poly(R, terms)
        if g:
            gens.append(g)
    return Ideal(R, gens or [R.var(0)])


def spoly(f: Poly, g: Poly) -> Poly:
    """S-polynomial written from scratch for checking bases."""
    mf, cf = f.leading_term()
    mg, cg = g.leading_term()
    l = tuple(max(a, b) for a, b in zip(mf, mg))
    uf = Poly(f.ring, {tuple(a - b for a, b in zip(l, mf)): 1 / cf})
    ug = Poly(f.ring, {tuple(a - b for a, b in zip(l, mg)): 1 / cg})
    return uf * f - ug * g


def sympy_groebner(I, order="grevlex"):
    G = sympy.groebner([to_sympy(g).as_expr() for g in I.generators],
                       *sympy.symbols(I.ring.names), order=order)
    return {sympy.expand(g) for g in G.exprs}


def linear_section_count(I, dim, seed=0):
    """Degree oracle: points of V(I) on a random linear space of complementary dimension.

    Adds ``dim`` random linear forms and an affine chart ``l = 1``, then counts
    the standard monomials of a sympy lex basis (solutions with multiplicity).
    """
    import random
    rng = random.Random(seed)
    syms = sympy.symbols(I.ring.names)
    eqs = [to_sympy(g).as_expr() for g in I.generators]
    def lin():
        return sum(sympy.Rational(rng.randint(-20, 20), rng.randint(1, 20)) * s for s in syms)
    eqs += [lin() for _ in range(dim)] + [lin() - 1]
    G = sympy.groebner(eqs, *syms, order="lex")
    if G.exprs == [1]:
        return 0
    assert G.is_zero_dimensional
    leads = [sympy.Poly(g, *syms).monoms(order="lex")[0] for g in G.exprs]
    # count monomials not divisible by any leading monomial
    bound = [max(m[i] for m in leads if all(e == 0 for j, e in enumerate(m) if j != i))
             for i in range(len(syms))]
    from itertools import product
    count = 0
    for m in product(*[range(b) for b in bound]):
        if not any(all(a >= b for a, b in zip(m, l)) for l in leads):
            count += 1
    return count
