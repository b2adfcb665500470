"""Division polynomials and the (2,2,2,2) construction."""

from dataclasses import dataclass
from math import gcd

from ..classifier import EllipticCurve, signature_class
from ..errors import CoincidentPointsError, CoveringStructureError, NotCoprimeError
from ..exact import INF, Moebius, Poly, RatFunc
from ..ramification import PointClass, orbifold_O2
from ._common import conjugate_by, point_value, transform_roots


@dataclass(frozen=True)
class YPoly:
    """poly(x) * y^e on y^2 = f(x), e in {0, 1}."""

    poly: Poly
    e: int

    def mul(self, other, f):
        e = self.e + other.e
        p = self.poly * other.poly
        if e == 2:
            p = p * f
        return YPoly(p, e % 2)

    def sub(self, other):
        if not other.poly:
            return self
        if not self.poly:
            return YPoly(-other.poly, other.e)
        if self.e != other.e:
            raise ValueError("parity mismatch")
        return YPoly(self.poly - other.poly, self.e)

    def square(self, f):
        return self.poly * self.poly * (f if self.e else Poly.const(1, f.field))


@dataclass(frozen=True)
class DivisionPolynomials:
    m: int
    psi: YPoly
    phi: Poly
    omega: YPoly
    psi_sq: Poly

    def x_map(self):
        return RatFunc(self.phi, self.psi_sq)


def _psi_table(E, top):
    K = E.field
    a, b = E.a, E.b
    f = E.cubic()
    one = Poly.const(1, K)
    psi = {
        0: YPoly(Poly._raw(K, ()), 1),
        1: YPoly(one, 0),
        2: YPoly(Poly.const(2, K), 1),
        3: YPoly(Poly([-a * a, 12 * b, 6 * a, 0, 3], K), 0),
        4: YPoly(Poly([-8 * b * b - a ** 3, -4 * a * b, -5 * a * a, 20 * b, 5 * a, 0, 1], K)
                 .scale(K.element(4)), 1),
    }

    def cube(p):
        return p.mul(p, f).mul(p, f)

    def sq(p):
        return p.mul(p, f)

    for n in range(5, top + 1):
        k, odd = divmod(n, 2)
        if odd:
            # psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3
            t1 = psi[k + 2].mul(cube(psi[k]), f)
            t2 = psi[k - 1].mul(cube(psi[k + 1]), f)
            psi[n] = t1.sub(t2)
        else:
            # psi_{2k} = psi_k (psi_{k+2} psi_{k-1}^2 - psi_{k-2} psi_{k+1}^2) / (2y)
            inner = psi[k + 2].mul(sq(psi[k - 1]), f).sub(psi[k - 2].mul(sq(psi[k + 1]), f))
            t = psi[k].mul(inner, f)
            psi[n] = _div_2y(t, f)
    return psi, f


def _div_2y(t, f):
    if t.e == 1:
        return YPoly(t.poly.scale(t.poly.field.element(1) / 2), 0)
    return YPoly(t.poly.exact_div(f).scale(t.poly.field.element(1) / 2), 1)


def division_polynomials(E, m):
    """psi_m, phi_m = x psi_m^2 - psi_{m+1} psi_{m-1}, omega_m for y^2 = x^3 + a x + b."""
    if not isinstance(E, EllipticCurve):
        E = EllipticCurve(*E)
    if m < 2:
        raise ValueError("m must be at least 2")
    psi, f = _psi_table(E, m + 2)
    K = E.field
    x = Poly.x(K)
    psi_sq = psi[m].square(f)
    phi = x * psi_sq - psi[m + 1].mul(psi[m - 1], f).poly
    # omega_m = (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / (4y)
    sq = lambda p: p.mul(p, f)
    num = psi[m + 2].mul(sq(psi[m - 1]), f).sub(psi[m - 2].mul(sq(psi[m + 1]), f))
    h = _div_2y(num, f)
    omega = YPoly(h.poly.scale(K.element(1) / 2), h.e)
    return DivisionPolynomials(m, psi[m], phi, omega, psi_sq)


def lattes_map(E, m):
    """x-coordinate of multiplication by m on E."""
    return division_polynomials(E, m).x_map()


def construct_pair_euclid2222(V, m=None):
    """The map A of a pair for V with signature (2,2,2,2).

    A marked point is sent to INF, the three others become the roots of a
    cubic, the cubic is depressed, and the multiplication-by-m map on the
    resulting curve is conjugated back to the original coordinate.
    """
    O = orbifold_O2(V)
    sc = signature_class(O)
    if sc.tag != "Euclid2222":
        raise CoveringStructureError(f"signature class {sc} is not (2,2,2,2)")
    n = V.degree
    if m is None:
        m = 2
        while gcd(m, n) != 1:
            m += 1
    if m < 2 or gcd(m, n) != 1:
        raise NotCoprimeError()
    return lattes_from_points([pc for pc, _ in O.points], m, V.field)


def lattes_from_points(points, m, K):
    """Lattes x-map of [m] for four marked points (classes or values; sizes summing to 4)."""
    points = [p if isinstance(p, PointClass) else PointClass.of_value(p, K) for p in points]
    if sum(pc.size for pc in points) != 4 or len(set(points)) != len(points):
        raise CoincidentPointsError("need four distinct marked points")
    far = next((pc for pc in points if pc.is_infinity), None)
    if far is None:
        far = next((pc for pc in points if pc.size == 1), None)
    if far is None:
        raise CoveringStructureError("no marked point is defined over the field")
    c = point_value(far)
    rho = Moebius.identity(K) if c is INF else Moebius(0, 1, 1, -c, K)
    cubic = Poly.const(1, K)
    for pc in points:
        if pc != far:
            cubic = cubic * transform_roots(pc.minpoly.over(K), rho)
    if cubic.degree != 3:
        raise CoincidentPointsError("marked points are not distinct")
    s = cubic.coeff(2)
    shift = Moebius(1, s / 3, 0, 1, K)          # X = x + s/3
    dep = cubic.compose(Poly([-s / 3, 1], K))
    E = EllipticCurve(dep.coeff(1), dep.coeff(0), K)
    L = lattes_map(E, m)
    return conjugate_by(rho.inverse(), conjugate_by(shift.inverse(), L))
