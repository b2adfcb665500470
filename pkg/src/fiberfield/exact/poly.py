"""Dense univariate polynomials over a NumberField."""

from fractions import Fraction
from math import lcm

import mpmath

from .._kernels import poly_mul as _kmul
from ..errors import FieldMismatchError
from .numberfield import NFElem, NumberField, QQ


# above this length, rational gcds go through sympy
_SYMPY_DEGREE = 8


def _common_field(a, b):
    if a is b or a == b:
        return a
    if a.is_rational:
        return b
    if b.is_rational:
        return a
    raise FieldMismatchError(f"cannot combine polynomials over {a!r} and {b!r}")


class Poly:
    """Polynomial with NFElem coefficients, low-to-high, no trailing zeros."""

    __slots__ = ("field", "c")

    def __init__(self, coeffs=(), field=None):
        if field is None:
            field = QQ
            for x in coeffs:
                if isinstance(x, NFElem):
                    field = x.field
                    break
        cs = [field.element(x) for x in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.c = tuple(cs)

    @classmethod
    def _raw(cls, field, coeffs):
        p = object.__new__(cls)
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p.field = field
        p.c = tuple(cs)
        return p

    @classmethod
    def x(cls, field=QQ):
        return cls._raw(field, (field.zero, field.one))

    @classmethod
    def const(cls, value, field=QQ):
        return cls._raw(field, (field.element(value),))

    @classmethod
    def from_roots(cls, roots, field=QQ):
        p = cls.const(1, field)
        for r in roots:
            p = p * cls._raw(field, (-field.element(r), field.one))
        return p

    # -- basic views ------------------------------------------------------
    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def lc(self):
        return self.c[-1] if self.c else self.field.zero

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else self.field.zero

    def is_monic(self):
        return bool(self.c) and self.c[-1] == self.field.one

    def is_rational(self):
        return all(x.is_rational() for x in self.c)

    def over(self, field):
        """Same polynomial viewed over ``field`` (an extension of Q)."""
        if field == self.field:
            return self
        return Poly._raw(field, [field.element(x) for x in self.c])

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        if isinstance(other, (int, Fraction, NFElem)):
            return self.c == Poly.const(other, self.field).c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    # -- ring operations --------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Poly):
            K = _common_field(self.field, other.field)
            return self.over(K), other.over(K), K
        K = self.field
        return self, Poly.const(other, K), K

    def __add__(self, other):
        a, b, K = self._lift(other)
        n = max(len(a.c), len(b.c))
        z = K.zero
        return Poly._raw(K, [(a.c[i] if i < len(a.c) else z) + (b.c[i] if i < len(b.c) else z)
                             for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [-x for x in self.c])

    def __sub__(self, other):
        a, b, K = self._lift(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        s = self.field.element(s) if not isinstance(s, NFElem) else s
        K = _common_field(self.field, s.field)
        s = K.element(s)
        return Poly._raw(K, [K.element(x) * s for x in self.c])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b, K = self._lift(other)
        if not a.c or not b.c:
            return Poly._raw(K, ())
        if len(a.c) == 1:
            return b.scale(a.c[0])
        if len(b.c) == 1:
            return a.scale(b.c[0])
        return _kernel_product(a, b, K)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Poly.const(1, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def truncate(self, n):
        return Poly._raw(self.field, self.c[:n])

    def shift_up(self, k):
        """Multiply by z^k."""
        if not self.c:
            return self
        return Poly._raw(self.field, (self.field.zero,) * k + self.c)

    def monic(self):
        if not self.c:
            return self
        if self.c[-1] == self.field.one:
            return self
        return self.scale(self.c[-1].inverse())

    def divmod(self, other):
        a, b, K = self._lift(other)
        if not b.c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(a.c)
        db = len(b.c) - 1
        if len(r) - 1 < db:
            return Poly._raw(K, ()), a
        inv = b.c[-1].inverse()
        q = [K.zero] * (len(r) - db)
        for s in range(len(r) - 1 - db, -1, -1):
            top = r[s + db]
            if not top:
                continue
            f = top * inv
            q[s] = f
            for i in range(db + 1):
                if b.c[i]:
                    r[s + i] = r[s + i] - f * b.c[i]
        return Poly._raw(K, q), Poly._raw(K, r[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    # -- evaluation -------------------------------------------------------
    def __call__(self, x):
        if isinstance(x, Poly):
            return self.compose(x)
        K = self.field
        if isinstance(x, NFElem):
            K = _common_field(K, x.field)
        x = K.element(x)
        acc = K.zero
        for c in reversed(self.c):
            acc = acc * x + c
        return acc

    def compose(self, q):
        K = _common_field(self.field, q.field)
        acc = Poly._raw(K, ())
        for c in reversed(self.c):
            acc = acc * q + K.element(c)
        return acc

    def derivative(self):
        return Poly._raw(self.field, [x * k for k, x in enumerate(self.c)][1:])

    def eval_mpc(self, z, prec=256):
        coeffs = self.mpc_coeffs(prec)
        with mpmath.workprec(prec + 16):
            acc = mpmath.mpc(0)
            for c in reversed(coeffs):
                acc = acc * z + c
            return acc

    def mpc_coeffs(self, prec=256):
        return [x.to_mpc(prec) for x in self.c]

    # -- gcd family -------------------------------------------------------
    def gcd(self, other):
        a, b, K = self._lift(other)
        if K.is_rational and min(len(a.c), len(b.c)) > _SYMPY_DEGREE:
            # Euclid over Q blows up coefficients; use the modular algorithm
            from .factor import gcd_rational
            return gcd_rational(a, b)
        while b.c:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def squarefree_part(self):
        if len(self.c) <= 1:
            return self.monic()
        g = self.gcd(self.derivative())
        return self.exact_div(g).monic()

    def squarefree_decomposition(self):
        """Yun's algorithm: list of (monic squarefree factor, multiplicity)."""
        if not self.c:
            raise ValueError("squarefree decomposition of the zero polynomial")
        if len(self.c) == 1:
            return []
        if self.field.is_rational and len(self.c) > _SYMPY_DEGREE:
            from .factor import squarefree_rational
            return squarefree_rational(self)
        a = self.monic()
        b = a.derivative()
        c = a.gcd(b)
        w = a.exact_div(c)
        y = b.exact_div(c)
        z = y - w.derivative()
        out = []
        i = 1
        while w.degree > 0:
            g = w.gcd(z)
            if g.degree > 0:
                out.append((g, i))
            w = w.exact_div(g)
            y = z.exact_div(g)
            z = y - w.derivative()
            i += 1
        return out

    def resultant(self, other):
        a, b, K = self._lift(other)
        if not a.c or not b.c:
            return K.zero
        acc = K.one
        while True:
            n, m = a.degree, b.degree
            if m == 0:
                return acc * b.c[0] ** n
            if n == 0:
                return acc * a.c[0] ** m
            r = a.divmod(b)[1]
            if not r.c:
                return K.zero
            if (n * m) & 1:
                acc = -acc
            acc = acc * b.c[-1] ** (n - r.degree)
            a, b = b, r

    def discriminant(self):
        n = self.degree
        r = self.resultant(self.derivative())
        s = -1 if (n * (n - 1) // 2) & 1 else 1
        return r * s / self.lc()

    # -- display ----------------------------------------------------------
    def to_str(self, var="z"):
        if not self.c:
            return "0"
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            x = self.c[k]
            if not x:
                continue
            s = str(x)
            if not x.is_rational() and k > 0:
                s = f"({s})"
            mon = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if k == 0:
                terms.append(s)
            elif s == "1":
                terms.append(mon)
            elif s == "-1":
                terms.append("-" + mon)
            else:
                terms.append(f"{s}*{mon}")
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()})"


def _flatten(p, stride):
    den = lcm(*(x.d for x in p.c))
    k = p.field.degree
    out = [0] * (len(p.c) * stride)
    for j, x in enumerate(p.c):
        f = den // x.d
        base = j * stride
        for t in range(k):
            v = x.n[t]
            if v:
                out[base + t] = v * f
    return out, den


def _kernel_product(a, b, K):
    k = K.degree
    stride = 2 * k - 1
    fa, da = _flatten(a, stride)
    fb, db = _flatten(b, stride)
    prod = _kmul(fa, fb)
    n = len(a.c) + len(b.c) - 1
    den = da * db
    out = []
    if k == 1:
        for j in range(n):
            out.append(NFElem(K, (prod[j],), den))
        return Poly._raw(K, out)
    prod = prod + [0] * (n * stride - len(prod))
    for j in range(n):
        coords, extra = K.reduce_int_coords(prod[j * stride:(j + 1) * stride])
        out.append(NFElem(K, coords, den * extra))
    return Poly._raw(K, out)


def interpolate(xs, ys, field=QQ):
    """Newton interpolation through distinct points."""
    K = field
    xs = [K.element(x) for x in xs]
    dd = [K.element(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    p = Poly.const(dd[n - 1], K)
    for i in range(n - 2, -1, -1):
        p = p * Poly._raw(K, (-xs[i], K.one)) + dd[i]
    return p


def as_poly(obj, field=None):
    if isinstance(obj, Poly):
        return obj if field is None else obj.over(field)
    return Poly(obj, field)


__all__ = ["Poly", "interpolate", "as_poly", "NumberField"]
