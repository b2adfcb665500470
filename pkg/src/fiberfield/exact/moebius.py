"""Moebius transformations z -> (az + b)/(cz + d)."""

from ..errors import CoincidentPointsError, NotAFunctionError
from .infinity import INF
from .numberfield import NFElem, QQ
from .poly import Poly, _common_field
from .ratfunc import RatFunc


def _field_of(*xs, default=QQ):
    K = default
    for x in xs:
        if isinstance(x, NFElem):
            K = _common_field(K, x.field)
    return K


class Moebius:
    """Invertible 2x2 matrix up to scaling, stored with first nonzero entry 1."""

    __slots__ = ("a", "b", "c", "d", "field")

    def __init__(self, a, b, c, d, field=None):
        K = field or _field_of(a, b, c, d)
        a, b, c, d = (K.element(x) for x in (a, b, c, d))
        if not (a * d - b * c):
            raise NotAFunctionError("singular Moebius matrix")
        lead = next(x for x in (a, b, c, d) if x)
        if lead != K.one:
            s = lead.inverse()
            a, b, c, d = a * s, b * s, c * s, d * s
        self.a, self.b, self.c, self.d, self.field = a, b, c, d, K

    @classmethod
    def identity(cls, field=QQ):
        return cls(1, 0, 0, 1, field)

    @classmethod
    def from_ratfunc(cls, f):
        if f.degree != 1:
            raise ValueError("not a degree-1 rational function")
        return cls(f.num.coeff(1), f.num.coeff(0), f.den.coeff(1), f.den.coeff(0), f.field)

    def matrix(self):
        return (self.a, self.b, self.c, self.d)

    def over(self, field):
        return Moebius(self.a, self.b, self.c, self.d, field)

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        return self.matrix() == other.matrix()

    def __hash__(self):
        return hash(self.matrix())

    def is_identity(self):
        return self.matrix() == (1, 0, 0, 1)

    def __call__(self, x):
        return self.apply(x)

    def apply(self, x):
        a, b, c, d = self.matrix()
        if x is INF:
            return a / c if c else INF
        den = c * x + d
        if not den:
            return INF
        return (a * x + b) / den

    def compose(self, other):
        "self(other(z))."
        K = _common_field(self.field, other.field)
        a, b, c, d = (K.element(x) for x in self.matrix())
        e, f, g, h = (K.element(x) for x in other.matrix())
        return Moebius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, K)

    def __mul__(self, other):
        if isinstance(other, Moebius):
            return self.compose(other)
        return NotImplemented

    def inverse(self):
        return Moebius(self.d, -self.b, -self.c, self.a, self.field)

    def as_ratfunc(self):
        K = self.field
        return RatFunc(Poly([self.b, self.a], K), Poly([self.d, self.c], K))

    def __str__(self):
        return str(self.as_ratfunc())

    def __repr__(self):
        return f"Moebius({self})"


def moebius_inverse(mu):
    return mu.inverse()


def moebius_apply(mu, x):
    return mu.apply(x)


def moebius_through_three_points(p, q, r, field=None):
    """The Moebius map sending p, q, r to 0, 1, INF."""
    K = field or _field_of(p, q, r)
    pts = [x if x is INF else K.element(x) for x in (p, q, r)]
    p, q, r = pts
    if p == q or q == r or p == r:
        raise CoincidentPointsError("three-point map needs distinct points")
    # z -> ((z - p)(q - r)) / ((z - r)(q - p)), with INF entries dropped
    if p is INF:
        return Moebius(0, q - r, 1, -r, K)
    if q is INF:
        return Moebius(1, -p, 1, -r, K)
    if r is INF:
        return Moebius(1, -p, 0, q - p, K)
    return Moebius(q - r, -p * (q - r), q - p, -r * (q - p), K)


def moebius_sending(src, dst, field=None):
    """The Moebius map with src[i] -> dst[i] for three distinct pairs."""
    m1 = moebius_through_three_points(*src, field=field)
    m2 = moebius_through_three_points(*dst, field=field)
    return m2.inverse().compose(m1)
