"""Simple number fields Q(alpha) and their elements.

An element is stored as an integer coordinate vector ``n`` over a single
positive denominator ``d`` in the power basis 1, alpha, ..., alpha^(k-1),
with gcd(n..., d) = 1.  Degree-1 fields encode Q itself.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
import numbers

import mpmath

from ..errors import FieldMismatchError, NotIrreducibleError


try:  # Python >= 3.12
    fraction_from_coprime = Fraction._from_coprime_ints
except AttributeError:
    def fraction_from_coprime(n, d):
        """Fraction n/d for coprime n, d > 0, skipping the gcd."""
        return Fraction(n, d, _normalize=False)


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot use {x!r} as an exact rational")


def _normalize(nums, den):
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    g = reduce(gcd, nums, den)
    if g != 1:
        nums = [x // g for x in nums]
        den //= g
    return tuple(nums), den


def _qpoly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(_qpoly_trim(a)) >= len(b):
        s = len(a) - len(b)
        c = a[-1] / lb
        q[s] = c
        for i, y in enumerate(b):
            a[s + i] -= c * y
        a.pop()
    return q, a


def _qpoly_xgcd_inverse(a, m):
    """Inverse of a modulo the irreducible polynomial m (Fraction lists)."""
    r0, r1 = list(m), _qpoly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = _qpoly_divmod(r0, r1)
        prod = [Fraction(0)] * (len(q) + len(s1))
        for i, x in enumerate(q):
            for j, y in enumerate(s1):
                prod[i + j] += x * y
        s2 = [(s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)
              for i in range(max(len(s0), len(prod)))]
        r0, r1, s0, s1 = r1, _qpoly_trim(r), s1, _qpoly_trim(s2)
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


class NumberField:
    """Q[x]/(m) for a monic irreducible m over Q.

    ``minpoly`` is given low-to-high as rationals (ints, Fractions or "p/q"
    strings).  ``embedding`` optionally picks the complex root used for
    numerics; by default the largest real root, else the root with the
    largest imaginary part.
    """

    def __init__(self, minpoly, label="a", check=True, embedding=None):
        m = [_as_fraction(c) for c in minpoly]
        _qpoly_trim(m)
        if len(m) < 2:
            raise NotIrreducibleError("minimal polynomial must have degree >= 1")
        lc = m[-1]
        self.minpoly = tuple(c / lc for c in m)
        self.degree = len(m) - 1
        self.label = label
        self._embedding_hint = embedding
        self._gen_cache = {}
        if check and self.degree > 1:
            from .factor import is_irreducible_rational
            if not is_irreducible_rational(self.minpoly):
                raise NotIrreducibleError(
                    f"minimal polynomial {list(map(str, self.minpoly))} is reducible")
        self._build_tables()
        self._key = tuple((c.numerator, c.denominator) for c in self.minpoly)
        self.zero = NFElem(self, (0,) * self.degree, 1, _raw=True)
        self.one = NFElem(self, (1,) + (0,) * (self.degree - 1), 1, _raw=True)

    def _build_tables(self):
        # alpha^(k+j) for j = 0..k-2 as integer rows over a common denominator
        k = self.degree
        row = [Fraction(0)] * k
        row[k - 1] = Fraction(1)
        rows = []
        cur = row
        for _ in range(k - 1):
            top = cur[k - 1]
            nxt = [Fraction(0)] + cur[:k - 1]
            for t in range(k):
                nxt[t] -= top * self.minpoly[t]
            rows.append(nxt)
            cur = nxt
        self._red_rows = rows
        self._red_den = lcm(*(c.denominator for r in rows for c in r)) if rows else 1
        self._red_int = [[int(c * self._red_den) for c in r] for r in rows]

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, NumberField) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.degree == 1 and self.minpoly == (0, 1):
            return "QQ"
        return f"NumberField({self.label!r}, minpoly={[str(c) for c in self.minpoly]})"

    @property
    def is_rational(self):
        return self.degree == 1

    # -- element construction --------------------------------------------
    def __call__(self, x):
        return self.element(x)

    def element(self, x):
        if isinstance(x, NFElem):
            if x.field == self:
                return x
            if x.field.is_rational:
                return self.from_rational(x.rational_value())
            raise FieldMismatchError(f"{x!r} does not belong to {self!r}")
        if isinstance(x, (list, tuple)):
            return self.from_coords(x)
        return self.from_rational(x)

    def from_rational(self, r):
        r = _as_fraction(r)
        if self.degree == 1:
            # generator may be a nonzero rational (minpoly x - r0); coordinate is the value
            return NFElem(self, (r.numerator,), r.denominator, _raw=True)
        return NFElem(self, (r.numerator,) + (0,) * (self.degree - 1), r.denominator, _raw=True)

    def from_coords(self, coords):
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coords)}")
        fr = [_as_fraction(c) for c in coords]
        den = lcm(*(c.denominator for c in fr))
        return NFElem(self, [int(c * den) for c in fr], den)

    def gen(self):
        if self.degree == 1:
            return self.from_rational(-self.minpoly[0])
        c = [0] * self.degree
        c[1] = 1
        return NFElem(self, tuple(c), 1, _raw=True)

    def reduce_int_coords(self, nums):
        """Reduce an integer vector of length <= 2k-1 to k coordinates.

        Returns (coords, extra_den) with value sum nums[t] alpha^t = coords / extra_den.
        """
        k = self.degree
        if len(nums) <= k:
            return list(nums) + [0] * (k - len(nums)), 1
        D = self._red_den
        out = [x * D for x in nums[:k]] + [0] * max(0, k - len(nums))
        for j in range(k, len(nums)):
            c = nums[j]
            if c:
                row = self._red_int[j - k]
                for t in range(k):
                    if row[t]:
                        out[t] += c * row[t]
        return out, D

    # -- numerics ---------------------------------------------------------
    def generator_value(self, prec=256):
        """Complex value of the generator under the chosen embedding."""
        if prec in self._gen_cache:
            return self._gen_cache[prec]
        with mpmath.workprec(prec + 32):
            if self.degree == 1:
                val = mpmath.mpc(mpmath.mpf(-self.minpoly[0].numerator) / self.minpoly[0].denominator)
            else:
                coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(self.minpoly)]
                roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=prec + 64)
                roots = [mpmath.mpc(r) for r in roots]
                if self._embedding_hint is not None:
                    hint = mpmath.mpc(self._embedding_hint)
                    val = min(roots, key=lambda r: abs(r - hint))
                else:
                    eps = mpmath.mpf(2) ** (-prec // 2)
                    real = [r for r in roots if abs(r.imag) < eps]
                    if real:
                        val = mpmath.mpc(max(real, key=lambda r: r.real).real)
                    else:
                        val = max(roots, key=lambda r: (r.imag, r.real))
        self._gen_cache[prec] = val
        return val


class NFElem:
    """Immutable element of a NumberField."""

    __slots__ = ("field", "n", "d")

    def __init__(self, field, nums, den=1, _raw=False):
        self.field = field
        if _raw:
            self.n = tuple(nums)
            self.d = den
        else:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if len(nums) != field.degree:
                raise ValueError("coordinate length must equal field degree")
            self.n, self.d = _normalize(list(nums), den)

    # -- views ------------------------------------------------------------
    @property
    def coords(self):
        return tuple(Fraction(x, self.d) for x in self.n)

    def is_zero(self):
        return not any(self.n)

    def __bool__(self):
        return any(self.n)

    def is_rational(self):
        return not any(self.n[1:])

    def rational_value(self):
        if any(self.n[1:]):
            raise ValueError(f"{self} is not rational")
        # coordinates are kept in lowest terms
        return fraction_from_coprime(self.n[0], self.d)

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, NFElem):
            if other.field is self.field or other.field == self.field:
                return other
            if other.field.is_rational:
                return self.field.from_rational(other.rational_value())
            if self.field.is_rational:
                return NotImplemented
            raise FieldMismatchError(f"mixing elements of {self.field!r} and {other.field!r}")
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            if isinstance(other, NFElem):
                return other.__add__(self)
            return o
        d1, d2 = self.d, o.d
        if d1 == d2:
            return NFElem(self.field, [a + b for a, b in zip(self.n, o.n)], d1)
        return NFElem(self.field, [a * d2 + b * d1 for a, b in zip(self.n, o.n)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.field, tuple(-x for x in self.n), self.d, _raw=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            if isinstance(other, NFElem):
                return (-other).__add__(self)
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            if isinstance(other, NFElem):
                return other.__mul__(self)
            return o
        K = self.field
        if K.degree == 1:
            return NFElem(K, (self.n[0] * o.n[0],), self.d * o.d)
        a, b = self.n, o.n
        k = K.degree
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        coords, extra = K.reduce_int_coords(prod)
        return NFElem(K, coords, self.d * o.d * extra)

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.n):
            raise ZeroDivisionError("inverse of zero")
        K = self.field
        if K.degree == 1:
            return NFElem(K, (self.d,), self.n[0])
        inv = _qpoly_xgcd_inverse([Fraction(x) for x in self.n], list(K.minpoly))
        inv = inv + [Fraction(0)] * (K.degree - len(inv))
        # value = inv(alpha) * d
        den = lcm(*(c.denominator for c in inv))
        return NFElem(K, [int(c * den) * self.d for c in inv], den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            if isinstance(other, NFElem):
                return other.field.element(self) / other
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, NFElem):
            if other.field == self.field:
                return self.n == other.n and self.d == other.d
            if other.field.is_rational and self.is_rational():
                return self.rational_value() == other.rational_value()
            if self.field.is_rational and other.is_rational():
                return self.rational_value() == other.rational_value()
            return False
        if isinstance(other, (int, Fraction)):
            if not self.is_rational():
                return False
            return Fraction(self.n[0], self.d) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.n[0], self.d))
        return hash((self.n, self.d, self.field))

    def sort_key(self):
        return (self.d, self.n)

    # -- numerics ---------------------------------------------------------
    def to_mpc(self, prec=256):
        with mpmath.workprec(prec + 16):
            if self.field.degree == 1:
                return mpmath.mpc(mpmath.mpf(self.n[0]) / self.d)
            g = self.field.generator_value(prec)
            acc = mpmath.mpc(0)
            for x in reversed(self.n):
                acc = acc * g + x
            return acc / self.d

    # -- display ----------------------------------------------------------
    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.n[0], self.d))
        parts = []
        lab = self.field.label or "a"
        for t, c in enumerate(self.coords):
            if c == 0:
                continue
            mon = "" if t == 0 else (lab if t == 1 else f"{lab}^{t}")
            if t == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"NFElem({self})"


QQ = NumberField([0, 1], label="", check=False)


def gaussian_field():
    """Q(i) with the embedding i -> +sqrt(-1)."""
    return NumberField([1, 0, 1], label="i", check=False, embedding=1j)
