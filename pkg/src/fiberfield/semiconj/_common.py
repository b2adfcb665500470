"""Helpers shared by the constructions."""

from math import gcd

from ..errors import NeedsExtensionError, NotCoprimeError
from ..exact import INF, Moebius, Poly, RatFunc


def smallest_coprime(n, start=2):
    m = start
    while gcd(m, n) != 1:
        m += 1
    return m


def require_coprime(m, n):
    if m < 2 or gcd(m, n) != 1:
        raise NotCoprimeError()


def point_value(pc):
    """The single field point of a class, or NeedsExtension for conjugates."""
    if pc.is_infinity:
        return INF
    if pc.minpoly.degree != 1:
        raise NeedsExtensionError("marked point is not defined over the field", pc.minpoly)
    return pc.value


def moebius_rf(mu):
    return mu.as_ratfunc()


def conjugate_by(mu, f):
    """mu o f o mu^-1."""
    return mu.as_ratfunc().compose(f).compose(mu.inverse().as_ratfunc())


def transform_roots(d, mu):
    """Monic polynomial whose roots are mu(r) for the finite images of the roots r of d."""
    K = d.field if not d.field.is_rational else mu.field
    d = d.over(K)
    inv = mu.inverse().over(K)
    a, b, c, e = inv.matrix()
    num = Poly([b, a], K)
    den = Poly([e, c], K)
    k = d.degree
    acc = Poly._raw(K, ())
    for j, cj in enumerate(d.c):
        if cj:
            acc = acc + (num ** j * den ** (k - j)).scale(cj)
    return acc.monic()


def finite_or_inf_key(x):
    return (1,) if x is INF else (0, x.sort_key())


def sending_zero_inf(p0, pinf, field):
    """A Moebius map with p0 -> 0 and pinf -> INF."""
    if pinf is INF:
        return Moebius(1, -p0, 0, 1, field)
    if p0 is INF:
        return Moebius(0, 1, 1, -pinf, field)
    return Moebius(1, -p0, 1, -pinf, field)


def monomial_coefficient(f, n):
    """kappa if f = kappa z^n (n may be negative), else None."""
    if n >= 0:
        if f.den.degree == 0 and f.num.degree == n and all(not c for c in f.num.c[:n]):
            return f.num.lc() / f.den.lc()
        return None
    if f.num.degree == 0 and f.den.degree == -n and all(not c for c in f.den.c[:-n]):
        return f.num.lc()
    return None


def is_identity_rf(f):
    return f == RatFunc.identity(f.field)


def descend(f, K):
    """f viewed over K when all its coefficients are rational, else None."""
    if f.field == K:
        return f
    if not f.is_rational():
        return None
    num = Poly([c.rational_value() for c in f.num.c], K)
    den = Poly([c.rational_value() for c in f.den.c], K)
    return RatFunc._raw(num, den)
