"""Rational functions in canonical form: coprime parts, monic denominator."""

import mpmath

from ..errors import NotAFunctionError
from .infinity import INF
from .numberfield import NFElem, QQ
from .poly import Poly, _common_field


class RatFunc:
    """num/den with gcd(num, den) = 1 and den monic.

    Instances are immutable; construct through ``rf_normalize`` or the
    constructor (which normalizes).  Equality is bit-exact on the canonical
    coefficients.
    """

    __slots__ = ("num", "den", "field")

    def __init__(self, num, den=None, field=None):
        if not isinstance(num, Poly):
            num = Poly(num, field)
        if den is None:
            den = Poly.const(1, num.field)
        elif not isinstance(den, Poly):
            den = Poly(den, field or num.field)
        f = rf_normalize(num, den)
        self.num, self.den, self.field = f.num, f.den, f.field

    @classmethod
    def _raw(cls, num, den):
        f = object.__new__(cls)
        f.num, f.den = num, den
        f.field = num.field if num.field == den.field else _common_field(num.field, den.field)
        if num.field != f.field:
            f.num = num.over(f.field)
        if den.field != f.field:
            f.den = den.over(f.field)
        return f

    @classmethod
    def identity(cls, field=QQ):
        return cls._raw(Poly.x(field), Poly.const(1, field))

    @classmethod
    def constant(cls, value, field=QQ):
        return cls._raw(Poly.const(value, field), Poly.const(1, field))

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, Poly.const(1, p.field))

    # -- views ------------------------------------------------------------
    @property
    def degree(self):
        return max(self.num.degree, self.den.degree, 0)

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.degree == 0

    def forms(self, d=None):
        """Homogeneous coefficient lists (num, den) padded to length d+1."""
        d = self.degree if d is None else d
        z = self.field.zero
        n = list(self.num.c) + [z] * (d + 1 - len(self.num.c))
        m = list(self.den.c) + [z] * (d + 1 - len(self.den.c))
        return n, m

    def over(self, field):
        return RatFunc._raw(self.num.over(field), self.den.over(field))

    def is_rational(self):
        return self.num.is_rational() and self.den.is_rational()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation -------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, RatFunc):
            return self.compose(x)
        return self.evaluate(x)

    def evaluate(self, x):
        """Value at a field element or INF; returns a field element or INF."""
        if x is INF:
            d = self.degree
            a, b = self.num.coeff(d), self.den.coeff(d)
            if not b:
                return INF
            return a / b
        K = self.field
        if isinstance(x, NFElem):
            K = _common_field(K, x.field)
        x = K.element(x)
        b = self.den(x)
        if not b:
            return INF
        return self.num(x) / b

    def eval_mpc(self, z, prec=256):
        """Numeric value at a complex point; returns None for a pole."""
        with mpmath.workprec(prec + 16):
            b = self.den.eval_mpc(z, prec)
            a = self.num.eval_mpc(z, prec)
            if b == 0:
                return None
            return a / b

    # -- algebra ----------------------------------------------------------
    def compose(self, g):
        "self(g(z))."
        K = _common_field(self.field, g.field)
        d = self.degree
        pn, pd = self.forms(d)
        N, D = g.num.over(K), g.den.over(K)
        npow = [Poly.const(1, K)]
        dpow = [Poly.const(1, K)]
        for _ in range(d):
            npow.append(npow[-1] * N)
            dpow.append(dpow[-1] * D)
        num = Poly._raw(K, ())
        den = Poly._raw(K, ())
        for k in range(d + 1):
            if not pn[k] and not pd[k]:
                continue
            mk = npow[k] * dpow[d - k]
            if pn[k]:
                num = num + mk.scale(K.element(pn[k]))
            if pd[k]:
                den = den + mk.scale(K.element(pd[k]))
        if not den:
            raise NotAFunctionError("composition lands on a pole identically")
        # coprime forms composed with coprime parts stay coprime
        s = den.lc().inverse()
        return RatFunc._raw(num.scale(s), den.scale(s))

    def derivative(self):
        P, Q = self.num, self.den
        return rf_normalize(P.derivative() * Q - P * Q.derivative(), Q * Q)

    def iterate(self, n):
        f = RatFunc.identity(self.field)
        for _ in range(n):
            f = self.compose(f)
        return f

    # -- display ----------------------------------------------------------
    def to_str(self, var="z"):
        if self.den.degree == 0 and self.den.lc() == self.field.one:
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RatFunc({self.to_str()})"


def rf_normalize(num, den):
    """Canonical representative of num/den."""
    if not den:
        raise NotAFunctionError("not a function")
    K = _common_field(num.field, den.field)
    num, den = num.over(K), den.over(K)
    if not num:
        return RatFunc._raw(Poly._raw(K, ()), Poly.const(1, K))
    g = num.gcd(den)
    if g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    s = den.lc().inverse()
    if s != K.one:
        num, den = num.scale(s), den.scale(s)
    return RatFunc._raw(num, den)


def rf_compose(f, g):
    return f.compose(g)


def rf_derivative(f):
    return f.derivative()


def ratfunc(num, den=(1,), field=None):
    """Convenience constructor from coefficient lists (low-to-high)."""
    n = num if isinstance(num, Poly) else Poly(num, field)
    d = den if isinstance(den, Poly) else Poly(den, field or n.field)
    return rf_normalize(n, d)


def rf_z(field=QQ):
    return RatFunc.identity(field)


__all__ = ["RatFunc", "rf_normalize", "rf_compose", "rf_derivative", "ratfunc", "rf_z"]
