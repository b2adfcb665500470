"""Critical values, local degrees, ramification portraits and the two
orbifolds attached to a rational map."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (CoveringStructureError, DegenerateMapError,
                     NotAConjugacyClassError)
from .exact import INF, QQ, NFElem, Poly, RatFunc, factor, interpolate, is_irreducible


# ---------------------------------------------------------------------------
# point classes

@dataclass(frozen=True)
class PointClass:
    """A Galois-stable set of points of the sphere over the base field.

    ``minpoly`` is a monic irreducible Poly (degree 1 for a field point);
    ``minpoly is None`` encodes INF.
    """

    minpoly: Poly = None

    @classmethod
    def infinity(cls):
        return cls(None)

    @classmethod
    def of_value(cls, x, field=None):
        if x is INF:
            return cls(None)
        if isinstance(x, PointClass):
            return x
        if isinstance(x, Poly):
            return cls.conjugate(x)
        K = field or (x.field if isinstance(x, NFElem) else QQ)
        x = K.element(x)
        return cls(Poly._raw(K, (-x, K.one)))

    @classmethod
    def conjugate(cls, minpoly):
        m = minpoly.monic()
        if m.degree < 1 or not is_irreducible(m):
            raise NotAConjugacyClassError()
        return cls(m)

    @property
    def is_infinity(self):
        return self.minpoly is None

    @property
    def size(self):
        """Number of geometric points in the class."""
        return 1 if self.minpoly is None else self.minpoly.degree

    @property
    def kind(self):
        if self.minpoly is None:
            return "infinity"
        return "value" if self.minpoly.degree == 1 else "conjugate"

    @property
    def value(self):
        if self.minpoly is None:
            return INF
        if self.minpoly.degree != 1:
            raise ValueError("conjugacy class has no single value")
        return -self.minpoly.c[0]

    def sort_key(self):
        if self.minpoly is None:
            return (2, 0, ())
        if self.minpoly.degree == 1:
            v = self.value
            return (0, 1, (v.d, v.n))
        return (1, self.minpoly.degree, tuple((x.d, x.n) for x in self.minpoly.c))

    def __str__(self):
        if self.minpoly is None:
            return "oo"
        if self.minpoly.degree == 1:
            return str(self.value)
        return f"roots({self.minpoly.to_str('t')})"

    def __repr__(self):
        return f"PointClass({self})"


@dataclass(frozen=True)
class CriticalClass:
    point: PointClass
    local_degrees: tuple

    @property
    def kind(self):
        return self.point.kind


@dataclass(frozen=True)
class RamificationPortrait:
    map_degree: int
    classes: tuple

    def riemann_hurwitz_total(self):
        return sum(c.point.size * sum(e - 1 for e in c.local_degrees) for c in self.classes)

    def class_at(self, point):
        pc = PointClass.of_value(point)
        for c in self.classes:
            if c.point == pc:
                return c
        return None


@dataclass(frozen=True)
class Orbifold:
    """Marked points (PointClass, nu >= 2) on a genus-0 base."""

    points: tuple = ()
    base_genus: int = 0

    def __post_init__(self):
        seen = set()
        for pc, nu in self.points:
            if nu < 2:
                raise ValueError("orbifold weights must be at least 2")
            if pc in seen:
                raise ValueError(f"point {pc} listed twice")
            seen.add(pc)
        object.__setattr__(self, "points",
                           tuple(sorted(self.points, key=lambda p: p[0].sort_key())))

    @classmethod
    def from_values(cls, pairs, field=None):
        return cls(tuple((PointClass.of_value(x, field), nu) for x, nu in pairs))

    def nu(self, point):
        pc = point if isinstance(point, PointClass) else PointClass.of_value(point)
        for p, n in self.points:
            if p == pc:
                return n
        return 1

    def signature(self):
        """Sorted multiset of weights, conjugate points counted separately."""
        out = []
        for pc, nu in self.points:
            out.extend([nu] * pc.size)
        return tuple(sorted(out))

    def __len__(self):
        return len(self.points)


# ---------------------------------------------------------------------------
# critical values

def _critical_point_poly(V):
    P, Q = V.num, V.den
    return P.derivative() * Q - P * Q.derivative()


def _check_degree(V):
    if V.degree < 2:
        raise DegenerateMapError()


def _norm_along(f, P, Q):
    """prod over roots r of f of (P(r) - c Q(r)), as a polynomial in c (f monic)."""
    K = f.field
    Pm, Qm = P % f, Q % f
    k = f.degree
    xs = [K.element(j) for j in range(k + 1)]
    ys = [f.resultant(Pm - Qm.scale(x)) for x in xs]
    return interpolate(xs, ys, K)


def _infinity_local_degree(V):
    """Local degree at the source point INF."""
    return 2 * V.degree - 2 - _critical_point_poly(V).degree + 1


def finite_critical_classes(V):
    """Irreducible minimal polynomials (over V.field) of the finite critical values."""
    _check_degree(V)
    P, Q = V.num, V.den
    W = _critical_point_poly(V)
    S = W.squarefree_part() if W.degree > 0 else Poly.const(1, V.field)
    classes = set()
    if S.degree > 0:
        _, facs = factor(S)
        for f, _ in facs:
            if (Q % f).is_zero():
                continue  # critical pole
            r = _norm_along(f, P, Q)
            classes.add(r.squarefree_part())
    if _infinity_local_degree(V) >= 2:
        v = V.evaluate(INF)
        if v is not INF:
            K = V.field
            classes.add(Poly._raw(K, (-v, K.one)))
    return sorted(classes, key=lambda m: PointClass(m).sort_key())


def infinity_is_critical(V):
    Q = V.den
    if V.num.degree - Q.degree >= 2:
        return True
    return Q.degree > 0 and Q.gcd(Q.derivative()).degree > 0


def critical_value_polynomial(V):
    """Squarefree monic polynomial whose roots are the finite critical values,
    and whether INF is a critical value."""
    classes = finite_critical_classes(V)
    out = Poly.const(1, V.field)
    for m in classes:
        out = out * m
    return out, infinity_is_critical(V)


# ---------------------------------------------------------------------------
# local degrees

def _fiber_numerator(V, pc):
    """Polynomial whose roots (with multiplicity) are the finite points over pc,
    and the number of target conjugates k."""
    P, Q = V.num, V.den
    if pc.is_infinity:
        return Q, 1
    d = pc.minpoly
    k = d.degree
    acc = Poly._raw(V.field, ())
    Ppow = [Poly.const(1, V.field)]
    for _ in range(k):
        Ppow.append(Ppow[-1] * P)
    Qpow = [Poly.const(1, V.field)]
    for _ in range(k):
        Qpow.append(Qpow[-1] * Q)
    for j, c in enumerate(d.c):
        if c:
            acc = acc + (Ppow[j] * Qpow[k - j]).scale(V.field.element(c))
    return acc, k


def _as_point_class(V, point):
    if isinstance(point, PointClass):
        return point
    if point is INF:
        return PointClass.infinity()
    if isinstance(point, Poly):
        m = point.over(V.field).monic() if point.field.is_rational else point.monic()
        if m.degree < 1 or not is_irreducible(m):
            raise NotAConjugacyClassError()
        return PointClass(m)
    return PointClass.of_value(V.field.element(point))


def fiber_structure(V, point):
    """Local-degree data over a target point class.

    Returns (parts, inf_degree, k, class): ``parts`` is the squarefree
    decomposition of the fiber numerator (factor, multiplicity),
    ``inf_degree`` the local degree of the source point INF if it lies over
    the class (else 0), and ``k`` the class size.
    """
    pc = _as_point_class(V, point)
    if not pc.is_infinity and V.field.is_rational and not pc.minpoly.field.is_rational:
        V = V.over(pc.minpoly.field)
    M, k = _fiber_numerator(V, pc)
    n = V.degree
    inf_deg = n * k - max(M.degree, 0)
    parts = M.squarefree_decomposition() if M.degree > 0 else []
    return parts, inf_deg, k, pc


def local_degree_multiset(V, point):
    """Local degrees of V above one point of the class, sorted descending."""
    if V.degree < 1:
        raise DegenerateMapError("constant map has no fibers")
    parts, inf_deg, k, _ = fiber_structure(V, point)
    out = []
    for g, e in parts:
        cnt, rem = divmod(g.degree, k)
        if rem:
            raise CoveringStructureError("fiber does not split evenly over conjugates")
        out.extend([e] * cnt)
    if inf_deg:
        out.append(inf_deg)
    out.sort(reverse=True)
    if sum(out) != V.degree:
        raise CoveringStructureError("local degrees do not sum to the map degree")
    return tuple(out)


def portrait(V):
    _check_degree(V)
    classes = [PointClass(m) for m in finite_critical_classes(V)]
    if infinity_is_critical(V):
        classes.append(PointClass.infinity())
    out = []
    for pc in classes:
        ld = local_degree_multiset(V, pc)
        if any(e > 1 for e in ld):
            out.append(CriticalClass(pc, ld))
    return RamificationPortrait(V.degree, tuple(out))


# ---------------------------------------------------------------------------
# orbifolds

def orbifold_O2(V):
    pts = []
    for c in portrait(V).classes:
        nu = lcm(*c.local_degrees)
        if nu > 1:
            pts.append((c.point, nu))
    return Orbifold(tuple(pts))


def _source_classes(V, target_pc):
    """[(source PointClass, local degree)] over a target class."""
    parts, inf_deg, _, _ = fiber_structure(V, target_pc)
    out = []
    for g, e in parts:
        _, facs = factor(g)
        for f, _ in facs:
            out.append((PointClass(f), e))
    if inf_deg:
        out.append((PointClass.infinity(), inf_deg))
    return out


def orbifold_O1(V, O2=None):
    """Source orbifold: nu1(z) = nu2(V(z)) / (local degree at z)."""
    if O2 is None:
        O2 = orbifold_O2(V)
    pts = []
    for pc, nu in O2.points:
        for spc, e in _source_classes(V, pc):
            q, r = divmod(nu, e)
            if r:
                raise CoveringStructureError(
                    f"local degree {e} does not divide weight {nu} over {pc}")
            if q > 1:
                pts.append((spc, q))
    return Orbifold(tuple(pts))


def euler_characteristic(O):
    chi = Fraction(2 - 2 * O.base_genus)
    for pc, nu in O.points:
        chi += pc.size * (Fraction(1, nu) - 1)
    return chi


def is_covering_map(f, O1, O2):
    """True iff nu2(f(z)) = nu1(z) * deg_z f at every point of the source."""
    if f.degree < 1:
        return False
    checked = set()
    for pc, nu2 in O2.points:
        if not pc.is_infinity and pc.minpoly.field != f.field and not pc.minpoly.field.is_rational:
            return False
        for spc, e in _source_classes(f, pc):
            if nu2 % e:
                return False
            if O1.nu(spc) != nu2 // e:
                return False
            checked.add(spc)
    for spc, nu1 in O1.points:
        if spc not in checked:
            return False
    if f.degree >= 2:
        marked = {pc for pc, _ in O2.points}
        for m in finite_critical_classes(f):
            if PointClass(m) not in marked:
                return False
        if infinity_is_critical(f) and PointClass.infinity() not in marked:
            return False
    return True


__all__ = [
    "PointClass", "CriticalClass", "RamificationPortrait", "Orbifold",
    "critical_value_polynomial", "finite_critical_classes", "infinity_is_critical",
    "local_degree_multiset", "fiber_structure", "portrait", "orbifold_O2", "orbifold_O1",
    "euler_characteristic", "is_covering_map",
]
