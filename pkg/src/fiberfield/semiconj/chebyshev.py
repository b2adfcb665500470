"""Power maps, Chebyshev and Zhukovski decompositions, and their pairs."""

from dataclasses import dataclass

from ..classifier import signature_class
from ..errors import CoveringStructureError, NeedsExtensionError
from ..exact import (INF, QQ, Moebius, Poly, RatFunc, factor, moebius_sending,
                     roots_in_field)
from ..ramification import PointClass, fiber_structure, orbifold_O2
from ._common import (conjugate_by, monomial_coefficient, point_value, require_coprime,
                      sending_zero_inf, smallest_coprime)
from .certificate import verify_semiconjugacy

CHEBYSHEV = "Chebyshev"
ZHUKOVSKI = "Zhukovski"


def chebyshev(n, field=QQ):
    """T_n from T_{n+1} = 2z T_n - T_{n-1}."""
    if n < 1:
        raise ValueError("n must be positive")
    a, b = Poly.const(1, field), Poly.x(field)
    two_z = Poly([0, 2], field)
    for _ in range(n - 1):
        a, b = b, two_z * b - a
    return b


def power_map(n, field=QQ):
    return RatFunc.from_poly(Poly([0] * n + [1], field))


def zhukovski(n, field=QQ):
    """(z^n + z^-n) / 2."""
    return RatFunc(Poly([1] + [0] * (n - 1) + [0] * n + [1], field), Poly([0] * n + [2], field))


@dataclass(frozen=True)
class Decomposition:
    """V = left o model o mu, with model z^n, T_n or the Zhukovski map."""

    kind: str
    n: int
    mu: Moebius
    left: Moebius

    def model(self, field=None):
        K = field or self.mu.field
        if self.kind == "power":
            return power_map(self.n, K)
        if self.kind == CHEBYSHEV:
            return RatFunc.from_poly(chebyshev(self.n, K))
        return zhukovski(self.n, K)

    def recompose(self):
        return self.left.as_ratfunc().compose(self.model()).compose(self.mu.as_ratfunc())

    def __iter__(self):
        return iter((self.kind, self.n, self.mu) if self.kind != "power" else (self.n, self.mu))


def _single_point(V, pc, multiplicity):
    """The unique source point over pc with the given local degree."""
    parts, inf_deg, _, _ = fiber_structure(V, pc)
    pts = []
    for g, e in parts:
        if e == multiplicity:
            pts.append(g)
    if inf_deg == multiplicity:
        pts.append(None)
    return pts


def _field_root(g):
    """The root of a degree-1 factor, or NeedsExtension with the factor."""
    if g is None:
        return INF
    if g.degree != 1:
        _, facs = factor(g)
        if all(f.degree == 1 for f, _ in facs):
            return [-f.c[0] for f, _ in facs]
        raise NeedsExtensionError("source point is not defined over the field", g)
    return -g.monic().c[0]


def _nth_root(kappa, n, K):
    x = Poly([-kappa] + [0] * (n - 1) + [1], K)
    roots = roots_in_field(x)
    if not roots:
        return None
    vals = [r for r, _ in roots]
    if K.one in vals:
        return K.one
    pos = [r for r in vals if r.is_rational() and r.rational_value() > 0]
    return pos[0] if pos else min(vals, key=lambda r: r.sort_key())


def decompose_power(V, strict=False):
    """V = left o z^n o mu from the two totally ramified points.

    With ``strict`` the left factor must be the identity, which needs the
    critical values to be 0 and INF and an n-th root of the scaling in the
    field; a missing root raises NeedsExtension carrying z^n - kappa.
    Otherwise the scaling is kept on the left when no root is available.
    """
    K = V.field
    O = orbifold_O2(V)
    sc = signature_class(O)
    if sc.tag != "NN" or V.degree != sc.n:
        raise CoveringStructureError(f"V is not a power map up to Moebius ({sc})")
    n = sc.n
    if len(O.points) == 1:
        raise NeedsExtensionError("critical values are conjugate", O.points[0][0].minpoly)
    (pa, _), (pb, _) = O.points
    va, vb = point_value(pa), point_value(pb)
    # INF goes to INF, else 0 goes to 0
    if va is INF or (vb is not INF and not vb):
        (pa, va), (pb, vb) = (pb, vb), (pa, va)
    c0, cinf = va, vb
    p0 = _field_root(_single_point(V, pa, n)[0])
    pinf = _field_root(_single_point(V, pb, n)[0])
    mu0 = sending_zero_inf(p0, pinf, K)
    if cinf is INF:
        lam = Moebius(1, c0, 0, 1, K)
    else:
        lam = Moebius(cinf, c0, 1, 1, K)
    R = lam.inverse().as_ratfunc().compose(V).compose(mu0.inverse().as_ratfunc())
    kappa = monomial_coefficient(R, n)
    if kappa is None:
        raise CoveringStructureError("normalized map is not a monomial")
    rho = _nth_root(kappa, n, K)
    if rho is not None:
        return Decomposition("power", n, Moebius(rho, 0, 0, 1, K).compose(mu0), lam)
    if strict:
        raise NeedsExtensionError("scaling needs an n-th root",
                                  Poly([-kappa] + [0] * (n - 1) + [1], K))
    return Decomposition("power", n, mu0, lam.compose(Moebius(kappa, 0, 0, 1, K)))


def _three_point(src, dst, K):
    return moebius_sending(src, dst, field=K)


def _chebyshev_targets(V, O, n):
    """Critical values playing the roles of -1, +1 and INF for T_n."""
    K = V.field
    if n == 2:
        # any degree-2 map; +1 is not critical and is placed at c(-1) + 2 when possible
        cands = [pc for pc, _ in O.points]
        cn = next((pc for pc in cands if pc.is_infinity), cands[-1])
        cm = next(pc for pc in cands if pc != cn)
        vm, vn = point_value(cm), point_value(cn)
        if vn is INF:
            return vm, vm + 2, vn
        vp = next(K.element(j) for j in range(4) if K.element(j) not in (vm, vn))
        return vm, vp, vn
    byw = {}
    for pc, nu in O.points:
        byw.setdefault(nu, []).append(pc)
    (cn,) = byw[n]
    twos = byw[2]
    if len(twos) == 1:
        raise NeedsExtensionError("weight-2 points are conjugate", twos[0].minpoly)
    cm, cp = twos
    if n % 2 == 0:
        # over -1 every point of T_n is a double point
        parts, inf_deg, _, _ = fiber_structure(V, cm)
        if not (all(e == 2 for _, e in parts) and inf_deg in (0, 2)):
            cm, cp = cp, cm
    return point_value(cm), point_value(cp), point_value(cn)


def _pick_pair(r):
    """Order two roots as (+1 preimage, -1 preimage), larger first when rational."""
    x, y = r
    if x.is_rational() and y.is_rational():
        return (x, y) if x.rational_value() > y.rational_value() else (y, x)
    return (x, y) if x.sort_key() > y.sort_key() else (y, x)


def _dihedral_chebyshev(V, O, n):
    K = V.field
    vm, vp, vn = _chebyshev_targets(V, O, n)
    one = K.one
    lam = _three_point((-one, one, INF), (vm, vp, vn), K)
    V0 = lam.inverse().as_ratfunc().compose(V)
    # the totally ramified point over INF
    (g,) = _single_point(V0, _pc_inf(), n)
    p = _field_root(g)
    shift = Moebius.identity(K) if p is INF else Moebius(0, 1, 1, -p, K)
    V1 = V0.compose(shift.inverse().as_ratfunc())
    if not V1.is_polynomial():
        raise CoveringStructureError("normalized Chebyshev candidate is not a polynomial")
    # simple points over +1 are the images of the interval ends
    parts, _, _, _ = fiber_structure(V1, K.one)
    simple = [h for h, e in parts if e == 1]
    if len(simple) != 1:
        raise CoveringStructureError("unexpected fiber over +1")
    s = simple[0].monic()
    if n % 2 == 1:
        # one simple point over each of +1 and -1
        sp = _field_root(s)
        parts_m, _, _, _ = fiber_structure(V1, -K.one)
        sm = _field_root(next(h for h, e in parts_m if e == 1).monic())
    else:
        if s.degree != 2:
            raise CoveringStructureError("unexpected fiber over +1")
        r = roots_in_field(s)
        if len(r) != 2:
            raise NeedsExtensionError("interval ends are conjugate", s)
        sp, sm = _pick_pair([x for x, _ in r])
    # affine mu with mu(sp) = 1, mu(sm) = -1
    alpha = 2 / (sp - sm)
    beta = one - alpha * sp
    mu = Moebius(alpha, beta, 0, 1, K).compose(shift)
    return Decomposition(CHEBYSHEV, n, mu, lam)


def _pc_inf():
    return PointClass.infinity()


def _dihedral_zhukovski(V, O, n):
    K = V.field
    one = K.one
    byw = {}
    for pc, nu in O.points:
        byw.setdefault(nu, []).append(pc)
    if n == 2:
        cands = [pc for pc, _ in O.points]
        cn = next((pc for pc in cands if pc.is_infinity), None) or \
            next((pc for pc in cands if pc.size == 1), None)
        if cn is None:
            raise NeedsExtensionError("no marked point is defined over the field",
                                      cands[0].minpoly)
        twos = [pc for pc in cands if pc != cn]
    else:
        (cn,) = byw[n]
        twos = byw[2]
    if len(twos) == 1:
        raise NeedsExtensionError("weight-2 points are conjugate", twos[0].minpoly)
    vm, vp, vn = (point_value(c) for c in (twos[0], twos[1], cn))
    lam = _three_point((-one, one, INF), (vm, vp, vn), K)
    V0 = lam.inverse().as_ratfunc().compose(V)
    pts = _single_point(V0, _pc_inf(), n)
    roots = []
    for g in pts:
        r = _field_root(g)
        roots.extend(r if isinstance(r, list) else [r])
    if len(roots) != 2:
        raise CoveringStructureError("expected two points over INF")
    q0, qinf = sorted(roots, key=lambda x: (x is INF, x.sort_key() if x is not INF else ()))
    mu0 = sending_zero_inf(q0, qinf, K)
    R = V0.compose(mu0.inverse().as_ratfunc())
    # R = (a w^n + a^-1 w^-n) / 2
    a = _zhukovski_scale(R, n)
    rho = _nth_root(a, n, K)
    if rho is None:
        raise NeedsExtensionError("scaling needs an n-th root",
                                  Poly([-a] + [0] * (n - 1) + [1], K))
    return Decomposition(ZHUKOVSKI, n, Moebius(rho, 0, 0, 1, K).compose(mu0), lam)


def _zhukovski_scale(R, n):
    num, den = R.num, R.den
    if den.degree != n or any(den.c[:n]) or num.degree != 2 * n:
        raise CoveringStructureError("normalized map is not of Zhukovski type")
    lead = num.lc() / den.lc()
    return 2 * lead


def decompose_dihedral(V):
    """V = left o T_n o mu (Chebyshev) or left o (z^n + z^-n)/2 o mu (Zhukovski)."""
    O = orbifold_O2(V)
    sc = signature_class(O)
    if sc.tag == "NN" and V.degree == 2:
        sc = type(sc)("TwoTwoN", 2)
    elif sc.tag != "TwoTwoN":
        raise CoveringStructureError(f"V is not of dihedral type ({sc})")
    n = sc.n
    if V.degree == n:
        d = _dihedral_chebyshev(V, O, n)
    elif V.degree == 2 * n:
        d = _dihedral_zhukovski(V, O, n)
    else:
        raise CoveringStructureError("degree does not match a dihedral model")
    if d.recompose() != V:
        raise CoveringStructureError("dihedral decomposition failed to recompose")
    return d


def decompose(V):
    sc = signature_class(orbifold_O2(V))
    if sc.tag == "NN":
        return decompose_power(V)
    return decompose_dihedral(V)


def construct_pair_power_dihedral(V, m=None, decomposition=None):
    """A = left o M_m o left^-1 and B = mu^-1 o M_m o mu for the matching model M."""
    d = decomposition or decompose(V)
    if m is None:
        m = smallest_coprime(V.degree)
    require_coprime(m, V.degree)
    K = V.field
    if d.kind == "power":
        src = tgt = power_map(m, K)
    elif d.kind == CHEBYSHEV:
        src = tgt = RatFunc.from_poly(chebyshev(m, K))
    else:
        # Zhukovski: z^m upstairs, T_m downstairs
        src = power_map(m, K)
        tgt = RatFunc.from_poly(chebyshev(m, K))
    A = conjugate_by(d.left, tgt)
    B = conjugate_by(d.mu.inverse(), src)
    notes = {"construction": d.kind, "m": m, "mu": str(d.mu), "left": str(d.left)}
    return verify_semiconjugacy(A, V, B, notes=notes)
