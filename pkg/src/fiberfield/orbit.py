"""Forward orbits of A and transport of the fibers of V along them through B."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath
import sympy

from ._kernels import hom_eval
from .exact import INF, NFElem
from .exact.numberfield import fraction_from_coprime
from .numeric import chordal, fiber_points, match_nearest, pairwise_distinct

# ---------------------------------------------------------------------------
# exact orbits

@dataclass(frozen=True)
class _IntegerForms:
    num: tuple
    den: tuple
    resultant: int


def _sylvester_resultant(a, b):
    """Homogeneous resultant of two binary forms of degree d (coefficient lists, low to high)."""
    d = len(a) - 1
    rows = []
    for i in range(d):
        rows.append([0] * i + list(reversed(a)) + [0] * (d - 1 - i))
    for i in range(d):
        rows.append([0] * i + list(reversed(b)) + [0] * (d - 1 - i))
    return int(sympy.Matrix(rows).det(method="bareiss"))


@lru_cache(maxsize=64)
def _integer_forms(A):
    d = A.degree
    n, m = A.forms(d)
    vals = [c.rational_value() for c in n + m]
    L = lcm(*(v.denominator for v in vals))
    ints = [int(v * L) for v in vals]
    num, den = tuple(ints[:d + 1]), tuple(ints[d + 1:])
    R = _sylvester_resultant(num, den)
    if R == 0:
        raise ArithmeticError("forms share a factor")
    return _IntegerForms(num, den, abs(R))


def _rational_step(forms, y):
    """A(y) for y = p/q in lowest terms, without a full-size gcd."""
    p, q = y.numerator, y.denominator
    N, D = hom_eval([forms.num, forms.den], p, q)
    if D == 0:
        return INF
    # any common factor of N and D divides the homogeneous resultant
    R = forms.resultant
    g = gcd(R, N % R) if R > 1 else 1
    if g > 1:
        g = gcd(g, D % g)
    if g > 1:
        N //= g
        D //= g
    if D < 0:
        N, D = -N, -D
    return fraction_from_coprime(N, D)


def _fast_forms(A, y0):
    if not A.is_rational() or A.degree < 1:
        return None
    if y0 is not INF and isinstance(y0, NFElem) and not y0.is_rational():
        return None
    return _integer_forms(A)


def forward_orbit(A, y0, n):
    """[y0, A(y0), ..., A^n(y0)] computed exactly; INF is an ordinary point."""
    K = A.field
    if y0 is not INF and not isinstance(y0, NFElem):
        y0 = K.element(y0)
    forms = _fast_forms(A, y0)
    out = [y0]
    y = y0
    for _ in range(n):
        if forms is not None and y is not INF:
            v = _rational_step(forms, y.rational_value())
            y = v if v is INF else y.field.element(v)
        else:
            y = A.evaluate(y)
        out.append(y)
    return out


def numeric_orbit(A, y0, n, prec=256):
    """The same orbit iterated in floating point."""
    out = []
    with mpmath.workprec(prec):
        y = y0 if y0 is INF else (y0.to_mpc(prec) if isinstance(y0, NFElem)
                                  else mpmath.mpc(mpmath.mpf(Fraction(y0).numerator)
                                                  / Fraction(y0).denominator))
        out.append(y)
        for _ in range(n):
            if y is INF:
                v = A.evaluate(INF)
                y = v if v is INF else v.to_mpc(prec)
            else:
                w = A.eval_mpc(y, prec)
                y = INF if w is None else w
            out.append(y)
    return out


def log_height(x):
    """log max(|numerator|, denominator) of a rational value, in bits."""
    if x is INF:
        return 0.0
    r = x.rational_value() if isinstance(x, NFElem) else Fraction(x)
    return float(max(abs(r.numerator), r.denominator, 1).bit_length())


# ---------------------------------------------------------------------------
# preperiodicity

@dataclass(frozen=True)
class Preperiodic:
    tail: int
    period: int


@dataclass(frozen=True)
class NoRepetition:
    bound: int


def preperiodicity_scan(A, y0, bound):
    """Exact repetition within ``bound`` steps, or NoRepetition (not a proof)."""
    K = A.field
    if y0 is not INF and not isinstance(y0, NFElem):
        y0 = K.element(y0)
    forms = _fast_forms(A, y0)
    seen = {y0: 0}
    y = y0
    for i in range(1, bound + 1):
        if forms is not None and y is not INF:
            v = _rational_step(forms, y.rational_value())
            y = v if v is INF else y.field.element(v)
        else:
            y = A.evaluate(y)
        if y in seen:
            j = seen[y]
            return Preperiodic(j, i - j)
        seen[y] = i
    return NoRepetition(bound)


# ---------------------------------------------------------------------------
# fiber transport

@dataclass(frozen=True)
class FiberOrbitTrace:
    y_values: list
    fibers: list
    transport_residuals: list
    bijective_flags: list
    precision_bits: int
    exceptional_steps: list = field(default_factory=list)
    assignments: list = field(default_factory=list, compare=False)

    @property
    def max_residual(self):
        return max(self.transport_residuals, default=mpmath.mpf(0))

    @property
    def all_bijective(self):
        return all(self.bijective_flags)

    def fiber_sizes(self):
        return [len(f) for f in self.fibers]


def _image(f, z, prec):
    if z is INF:
        v = f.evaluate(INF)
        return v if v is INF else v.to_mpc(prec)
    w = f.eval_mpc(z, prec)
    return INF if w is None else w


def _as_numeric(y, prec):
    if y is INF:
        return INF
    return y.to_mpc(prec)


def fiber_track(V, A, B, y0, n, precision_bits=256):
    """Follow V^-1(y_i) along y_{i+1} = A(y_i), matching B(fiber_i) against fiber_{i+1}.

    A step is bijective when fiber_i has deg V distinct points, their images
    under B are distinct, and every image lies within 2^(-bits/2) (relative
    distance) of exactly one point of the next fiber.  Residuals are chordal.
    """
    prec = precision_bits
    ys = forward_orbit(A, y0, n)
    tol = mpmath.mpf(2) ** (-prec // 2)
    fibers, residuals, flags, exceptional, assigns = [], [], [], [], []
    with mpmath.workprec(prec):
        for y in ys:
            fibers.append(fiber_points(V, _as_numeric(y, prec + 64), prec))
        for i in range(n):
            src, dst = fibers[i], fibers[i + 1]
            imgs = [_image(B, z, prec) for z in src]
            assign, res, ok = match_nearest(imgs, dst, tol)
            distinct = pairwise_distinct(src, tol) and pairwise_distinct(imgs, tol)
            r = max(res, default=mpmath.mpf(0)) if res else mpmath.mpf(1)
            good = bool(ok and distinct and r < tol)
            residuals.append(r)
            flags.append(good)
            assigns.append(assign)
            if not distinct:
                exceptional.append(i)
    return FiberOrbitTrace(ys, fibers, residuals, flags, prec, exceptional, assigns)


# ---------------------------------------------------------------------------
# exact fibers of the octahedral invariant

def klein_fiber_exact(a):
    """The orbit of a under the 24 octahedral Moebius maps, as points of Q(i) or INF."""
    from .semiconj.spherical import klein_group_S4
    G = klein_group_S4()
    K = G[0].field
    x = a if a is INF or isinstance(a, NFElem) and a.field == K else K.element(
        a.rational_value() if isinstance(a, NFElem) else a)
    pts = {s.apply(x) for s in G}
    return sorted(pts, key=lambda p: (1, ()) if p is INF else (0, p.sort_key()))


__all__ = [
    "forward_orbit", "numeric_orbit", "fiber_track", "FiberOrbitTrace", "klein_fiber_exact",
    "preperiodicity_scan", "Preperiodic", "NoRepetition", "log_height",
]
