"""Factorization over Q and over simple number fields via sympy."""

from fractions import Fraction
from functools import lru_cache

import sympy
from sympy.polys.polyclasses import ANP

_X = sympy.Symbol("x")


def _to_q(c):
    return sympy.Rational(c.numerator, c.denominator)


def _from_q(c):
    return Fraction(int(c.numerator), int(c.denominator))


def is_irreducible_rational(coeffs):
    """Irreducibility over Q of a polynomial given as low-to-high rationals."""
    p = sympy.Poly([_to_q(Fraction(c)) for c in reversed(coeffs)], _X, domain=sympy.QQ)
    return p.degree() >= 1 and p.is_irreducible


@lru_cache(maxsize=None)
def _domain(key):
    minpoly = [Fraction(n, d) for n, d in key]
    if len(minpoly) == 2:
        return sympy.QQ
    expr = sum(_to_q(c) * _X ** k for k, c in enumerate(minpoly))
    K = sympy.QQ.algebraic_field(sympy.CRootOf(expr, 0))
    mod = [_from_q(c) for c in K.mod.to_list()]
    if mod != list(reversed(minpoly)):
        raise AssertionError("sympy chose a different generator for the field")
    return K


def _sympy_domain(field):
    return _domain(field._key)


def to_sympy(p):
    """Convert a Poly to a sympy Poly in x over the matching domain."""
    K = p.field
    dom = _sympy_domain(K)
    if K.degree == 1:
        coeffs = [_to_q(x.rational_value()) for x in reversed(p.c)]
        return sympy.Poly(coeffs or [0], _X, domain=sympy.QQ)
    mod = dom.mod.to_list()
    elems = []
    for x in reversed(p.c):
        rep = [sympy.QQ(int(v), x.d) for v in reversed(x.n)]
        while rep and rep[0] == 0:
            rep.pop(0)
        elems.append(ANP(rep, mod, sympy.QQ))
    return sympy.Poly.from_list(elems or [dom.zero], _X, domain=dom)


def from_sympy(sp, field):
    from .poly import Poly
    dom = _sympy_domain(field)
    out = []
    for c in reversed(sp.rep.to_list()):
        if field.degree == 1:
            out.append(field.from_rational(_from_q(c)))
        else:
            rep = [_from_q(v) for v in reversed(c.to_list())]
            rep = rep + [Fraction(0)] * (field.degree - len(rep))
            out.append(field.from_coords(rep))
    return Poly._raw(field, out)


def factor(p):
    """Complete factorization over p.field.

    Returns (leading coefficient, [(monic irreducible Poly, multiplicity), ...])
    sorted by (degree, coefficients) for determinism.
    """
    if p.degree < 1:
        return p.lc(), []
    lc = p.lc()
    _, facs = to_sympy(p.monic()).factor_list()
    out = [(from_sympy(f, p.field).monic(), e) for f, e in facs]
    out.sort(key=lambda fe: (fe[0].degree, [c.sort_key() for c in fe[0].c], fe[1]))
    return lc, out


def factor_rational(p):
    """Factorization of a polynomial with rational coefficients over Q."""
    from .numberfield import QQ
    if not p.is_rational():
        raise ValueError("coefficients are not rational")
    return factor(p.over(QQ) if p.field != QQ else p)


def gcd_rational(a, b):
    """Monic gcd over Q via sympy's modular algorithm."""
    g = to_sympy(a).gcd(to_sympy(b))
    return from_sympy(g, a.field).monic()


def squarefree_rational(p):
    """Squarefree decomposition over Q via sympy: [(monic factor, multiplicity)]."""
    _, parts = to_sympy(p.monic()).sqf_list()
    return [(from_sympy(g, p.field).monic(), e) for g, e in parts if g.degree() > 0]


def is_irreducible(p):
    if p.degree < 1:
        return False
    return to_sympy(p).is_irreducible


def roots_in_field(p):
    """Roots of p lying in p.field, with multiplicities."""
    _, facs = factor(p)
    return [(-f.c[0], e) for f, e in facs if f.degree == 1]
