"""Truncated power series over a NumberField, stored as Poly in s."""

from ..exact import Poly


def mul(a, b, n):
    return (a.truncate(n) * b.truncate(n)).truncate(n)


def inverse(a, n):
    """1/a mod s^n by Newton iteration; a(0) must be nonzero."""
    K = a.field
    b = Poly.const(a.coeff(0).inverse(), K)
    k = 1
    two = Poly.const(2, K)
    while k < n:
        k = min(2 * k, n)
        b = mul(b, two - mul(a, b, k), k)
    return b


def taylor_shift(p, z0):
    """p(z0 + s)."""
    return p.compose(Poly([z0, 1], p.field))


def of_ratfunc(f, z0, n):
    """Expansion of f(z0 + s) mod s^n; f must be finite at z0."""
    num = taylor_shift(f.num, z0)
    den = taylor_shift(f.den, z0)
    return mul(num, inverse(den, n), n)


def compose_poly(P, h, n):
    """P(h(s)) mod s^n by Horner."""
    K = h.field
    acc = Poly._raw(K, ())
    for c in reversed(P.c):
        acc = mul(acc, h, n) + Poly.const(K.element(c), K)
    return acc.truncate(n)
