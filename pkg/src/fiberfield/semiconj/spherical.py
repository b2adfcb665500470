"""Octahedral and tetrahedral constructions through a fixed invariant covering.

For a finite Moebius group G with invariant map theta (theta o s = theta for
s in G) and a G-equivariant F, theta o F = A o theta for a unique A.  When
V is a left factor of theta, theta = V o H, the source map H o F also
factors as B o H, and A o V = V o B.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..classifier import signature_class
from ..errors import (CoveringStructureError, NeedsExtensionError, NotALeftFactorError,
                      NotFiberCompatibleError)
from ..exact import (INF, QQ, Moebius, NumberField, Poly, RatFunc, factor, gaussian_field,
                     moebius_sending, ratfunc, roots_in_field)
from ..exact.linalg import nullspace
from ..ramification import _critical_point_poly, orbifold_O2
from . import series
from ._common import conjugate_by, descend, point_value
from .certificate import verify_semiconjugacy


@dataclass(frozen=True)
class EquivariantData:
    theta: RatFunc
    F: RatFunc
    group_generators: tuple
    label: str = ""


def _check_equivariance(F, gens):
    for s in gens:
        r = s.as_ratfunc()
        if F.compose(r) != r.compose(F):
            raise AssertionError(f"F is not equivariant under {s}")


def octahedral_theta():
    """The degree-24 invariant with critical values 0 (weight 3), -1 (weight 2), INF (weight 4)."""
    u = Poly([1, 0, 0, 0, 14, 0, 0, 0, 1])
    w = Poly([-1, 0, 0, 0, 1])
    num = -(u ** 3)
    den = (w ** 4).shift_up(4).scale(108)
    return RatFunc(num, den)


def tetrahedral_theta():
    """Degree-12 invariant of the even subgroup; octahedral = -t^2/108 - 1 composed with it."""
    g = Poly([1, 0, 0, 0, 1]) * Poly([-1, -2, 1]) * Poly([-1, 2, 1]) * Poly([1, 0, 6, 0, 1])
    den = (Poly([-1, 0, 0, 0, 1]) ** 2).shift_up(2)
    return RatFunc(g, den)


def equivariant_quintic():
    return ratfunc([0, 5, 0, 0, 0, -1], [-1, 0, 0, 0, 5])


@lru_cache(maxsize=None)
def s4_data():
    K = gaussian_field()
    i = K.gen()
    gens = (Moebius(i, 0, 0, 1, K), Moebius(1, i, 1, -i, K))
    F = equivariant_quintic()
    theta = octahedral_theta()
    _check_equivariance(F, gens)
    for s in gens:
        if theta.compose(s.as_ratfunc()) != theta:
            raise AssertionError("theta is not invariant")
    if gcd(F.degree, theta.degree) != 1:
        raise AssertionError("degrees are not coprime")
    return EquivariantData(theta, F, gens, "octahedral")


def _closure(gens, limit):
    K = gens[0].field
    e = Moebius.identity(K)
    seen = {e}
    order = [e]
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s.compose(g)
                if h not in seen:
                    seen.add(h)
                    order.append(h)
                    nxt.append(h)
                    if len(order) > limit:
                        raise AssertionError("group closure exceeds its expected order")
        frontier = nxt
    return order


@lru_cache(maxsize=None)
def _s4_tuple():
    return tuple(_closure(s4_data().group_generators, 24))


def klein_group_S4():
    """All 24 elements generated by z -> iz and z -> (z+i)/(z-i)."""
    G = list(_s4_tuple())
    if len(G) != 24:
        raise AssertionError(f"closure has {len(G)} elements")
    return G


@lru_cache(maxsize=None)
def _a4_tuple():
    t = tetrahedral_theta()
    return tuple(s for s in _s4_tuple() if t.compose(s.as_ratfunc()) == t)


@lru_cache(maxsize=None)
def a4_data():
    theta = tetrahedral_theta()
    G = _a4_tuple()
    if len(G) != 12:
        raise AssertionError("even subgroup does not have 12 elements")
    F = equivariant_quintic()
    _check_equivariance(F, G)
    return EquivariantData(theta, F, G, "tetrahedral")


def klein_group_A4():
    return list(_a4_tuple())


# ---------------------------------------------------------------------------
# linear solve for the downstairs map

def _powers(p, k):
    out = [Poly.const(1, p.field)]
    for _ in range(k):
        out.append(out[-1] * p)
    return out


def solve_A_from_theta(theta, F, m=None):
    """The unique A of degree m with theta o F = A o theta (denominator monic).

    Writes A = sum a_k w^k / sum b_k w^k and clears denominators in
    N1/D1 = A(N/D), giving N1 * sum b_k N^k D^(m-k) = D1 * sum a_k N^k D^(m-k).
    """
    if m is None:
        m = F.degree
    TF = theta.compose(F)
    K = TF.field
    N, D = theta.num.over(K), theta.den.over(K)
    N1, D1 = TF.num, TF.den
    Np, Dp = _powers(N, m), _powers(D, m)
    basis = [Np[k] * Dp[m - k] for k in range(m + 1)]
    cols = [-(D1 * c) for c in basis] + [N1 * c for c in basis]
    nrows = max(c.degree for c in cols) + 1
    rows = [[c.coeff(r) for c in cols] for r in range(nrows)]
    ns = nullspace(rows, K, 2 * m + 2)
    if len(ns) != 1:
        raise NotFiberCompatibleError()
    v = ns[0]
    a = Poly(v[:m + 1], K)
    b = Poly(v[m + 1:], K)
    if not b:
        raise NotFiberCompatibleError()
    A = RatFunc(a, b)
    if A.degree != m or A.compose(theta) != TF:
        raise NotFiberCompatibleError()
    return A


# ---------------------------------------------------------------------------
# right factor by series and Pade reconstruction

def _base_points(K):
    pts = [Fraction(2), Fraction(3), Fraction(-2), Fraction(1, 2), Fraction(5), Fraction(-3, 2),
           Fraction(7, 3)]
    out = [K.element(x) for x in pts]
    if K.degree > 1:
        g = K.gen()
        out += [g + 2, 2 * g + 1, g - 3]
    return out


def _series_root(P, Q, T, w0, n):
    """h with P(h) = T Q(h) mod s^n and h(0) = w0 (a simple root)."""
    K = T.field
    dP, dQ = P.derivative(), Q.derivative()
    h = Poly.const(w0, K)
    k = 1
    while k < n:
        k = min(2 * k, n)
        G = series.compose_poly(P, h, k) - series.mul(T, series.compose_poly(Q, h, k), k)
        dG = series.compose_poly(dP, h, k) - series.mul(T, series.compose_poly(dQ, h, k), k)
        h = h - series.mul(G, series.inverse(dG, k), k)
    return h


def _pade(h, k, n):
    """(a, b) with deg a, deg b <= k and a = b h mod s^n, or None."""
    K = h.field
    rows = [[h.coeff(i - j) if i >= j else K.zero for j in range(k + 1)]
            for i in range(k + 1, 2 * k + 1)]
    if rows:
        ns = nullspace(rows, K, k + 1)
        if not ns:
            return None
        b = Poly(ns[0], K)
    else:
        b = Poly.const(1, K)
    if not b.coeff(0):
        return None
    a = series.mul(b, h, k + 1)
    if (series.mul(b, h, n) - a).truncate(n):
        return None
    return a, b


def _root_candidates(V, t0, K):
    P, Q = V.num.over(K), V.den.over(K)
    M = P - Q.scale(t0)
    dM = M.derivative()
    out = []
    for r, e in roots_in_field(M):
        if e == 1 and dM(r) and Q(r):
            out.append(r)
    return out


def _right_factor_over(theta, V, K):
    th = theta.over(K) if theta.field != K else theta
    Vk = V.over(K) if V.field != K else V
    N = th.degree
    k = N // Vk.degree
    nterms = 4 * N + 10
    W = _critical_point_poly(th)
    for z0 in _base_points(K):
        if not th.den(z0) or not W(z0):
            continue
        t0 = th.evaluate(z0)
        for w0 in _root_candidates(Vk, t0, K):
            T = series.of_ratfunc(th, z0, nterms)
            h = _series_root(Vk.num, Vk.den, T, w0, nterms)
            ab = _pade(h, k, nterms)
            if ab is None:
                continue
            back = Poly([-z0, 1], K)
            H = RatFunc(ab[0].compose(back), ab[1].compose(back))
            if H.degree == k and Vk.compose(H) == th:
                return H
        return None
    return None


def right_factor(theta, V, field=None):
    """H with theta = V o H.

    Solves V(h(s)) = theta(z0 + s) as a power series at a base point where
    theta is unramified, reconstructs h as a rational function of degree
    deg theta / deg V and verifies the composition exactly.  The series
    is computed over ``field``; by default the common field of the inputs,
    then Q(i) when that field is Q.
    """
    if V.degree < 1 or theta.degree % V.degree:
        raise NotALeftFactorError()
    if field is not None:
        fields = [field]
    else:
        K = theta.field if not theta.field.is_rational else V.field
        fields = [K] + ([gaussian_field()] if K.is_rational else [])
    for K in fields:
        H = _right_factor_over(theta, V, K)
        if H is not None:
            return H
    raise NotALeftFactorError()


# ---------------------------------------------------------------------------
# construction

@lru_cache(maxsize=None)
def cyclotomic12():
    """Q(zeta_12): contains i = zeta^3 and sqrt(-3) = 2 zeta^2 - 1."""
    return NumberField([1, 0, -1, 0, 1], label="w", embedding=complex(0.8660254037844386, 0.5))


def _weight_classes(O):
    byw = {}
    for pc, nu in O.points:
        byw.setdefault(nu, []).append(pc)
    return byw


def _octahedral_setup(V, O):
    K = V.field
    if K.is_rational:
        L = gaussian_field()
    elif K.minpoly == gaussian_field().minpoly:
        L = K
    else:
        raise NeedsExtensionError("the construction runs over Q(i)", Poly([1, 0, 1]))
    byw = _weight_classes(O)
    c2, c3, c4 = (point_value(byw[w][0]) for w in (2, 3, 4))
    lam = moebius_sending((K.element(-1), K.zero, INF), (c2, c3, c4), field=K)
    return L, lam, s4_data()


def _tetrahedral_setup(V, O):
    K = V.field
    if not K.is_rational:
        raise NeedsExtensionError("tetrahedral construction needs V over Q",
                                  Poly([1, 0, -1, 0, 1]))
    L = cyclotomic12()
    byw = _weight_classes(O)
    (c2,) = byw[2]
    threes = byw[3]
    vals = []
    for pc in threes:
        if pc.size == 1:
            vals.append(L.element(point_value(pc).rational_value()))
        else:
            r = roots_in_field(pc.minpoly.over(L))
            if len(r) != pc.size:
                raise NeedsExtensionError("weight-3 values are not in Q(zeta_12)", pc.minpoly)
            vals.extend(x for x, _ in r)
    if len(vals) != 2:
        raise CoveringStructureError("expected two weight-3 values")
    w = L.gen()
    s = 2 * w * w - 1          # sqrt(-3)
    c2v = point_value(c2)
    c2v = c2v if c2v is INF else L.element(c2v.rational_value())
    lam = moebius_sending((6 * s, -6 * s, INF), (vals[0], vals[1], c2v), field=L)
    return L, lam, a4_data()


def construct_pair_s4(V):
    """Certificate (A, V, B) for V with octahedral or tetrahedral signature.

    The critical values of V are moved onto those of the fixed invariant by
    a Moebius map lam, theta = (lam^-1 o V) o H is solved for H, and
    A = lam o A0 o lam^-1, B from H o F = B o H, with A0 the map for theta.
    """
    if V.degree < 1 or 24 % V.degree:
        raise NotALeftFactorError(f"degree {V.degree} does not divide 24")
    O = orbifold_O2(V)
    sc = signature_class(O)
    if sc.tag == "Octahedral":
        L, lam, data = _octahedral_setup(V, O)
    elif sc.tag == "Tetrahedral":
        L, lam, data = _tetrahedral_setup(V, O)
    else:
        raise CoveringStructureError(f"signature class {sc} is not octahedral or tetrahedral")
    K = V.field
    inv = lam.inverse().as_ratfunc()
    V1 = inv.compose(V.over(L) if lam.field == L and V.field != L else V)
    H = right_factor(data.theta, V1, field=L)
    A0 = solve_A_from_theta(data.theta, data.F)
    A = conjugate_by(lam, A0)
    B = solve_A_from_theta(H, data.F.over(L))
    A = descend(A, K) or A
    B = descend(B, K) or B
    notes = {"construction": data.label, "m": data.F.degree, "normalization": str(lam),
             "right_factor": str(H), "theta": str(data.theta)}
    return verify_semiconjugacy(A, V, B, notes=notes)
