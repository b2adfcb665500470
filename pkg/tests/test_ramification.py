from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given

from fiberfield.errors import DegenerateMapError, NotAConjugacyClassError
from fiberfield.exact import INF, Poly, RatFunc, ratfunc
from fiberfield.ramification import (Orbifold, PointClass, critical_value_polynomial,
                                     euler_characteristic, is_covering_map,
                                     local_degree_multiset, orbifold_O1, orbifold_O2,
                                     portrait)
from fiberfield.semiconj import chebyshev, octahedral_theta

from conftest import moebius_maps, rational_maps

z, w = sympy.symbols("z w")
TOL = mpmath.mpf(10) ** -30


def T(n):
    return RatFunc.from_poly(chebyshev(n))


# -- critical values -------------------------------------------------------

def test_critical_values_of_square():
    cv, at_inf = critical_value_polynomial(ratfunc([0, 0, 1]))
    assert cv == Poly([0, 1]) and at_inf


def test_critical_values_of_flagship(V):
    cv, at_inf = critical_value_polynomial(V)
    assert cv == Poly([0, 1, 1])     # roots 0 and -1
    assert at_inf


def test_critical_values_of_cubic_chebyshev():
    # 4z^3 - 3z has critical points +-1/2 with values -+1
    cv, at_inf = critical_value_polynomial(T(3))
    assert cv == Poly([-1, 0, 1]) and at_inf


def test_degenerate_maps_rejected():
    with pytest.raises(DegenerateMapError):
        critical_value_polynomial(ratfunc([1, 1], [2, 1]))


# -- local degrees ---------------------------------------------------------

def test_local_degrees_flagship(V):
    assert local_degree_multiset(V, 0) == (3, 1)
    assert local_degree_multiset(V, -1) == (2, 1, 1)
    assert local_degree_multiset(V, INF) == (4,)


def test_local_degrees_root_multiplicity_oracle():
    # multiplicities of 3z^4 - 4z^3 - c at c = 0 and c = -1
    assert sorted(sympy.roots(3 * z ** 4 - 4 * z ** 3).values()) == [1, 3]
    assert sorted(sympy.roots(3 * z ** 4 - 4 * z ** 3 + 1, multiple=False).values()) == [1, 1, 2]


def test_local_degrees_over_conjugate_class():
    # z^4 + 2 z^2: critical values 0 (z=0) and -1 (z = +-i); over t^2 + 1 nothing ramifies
    f = ratfunc([0, 0, 2, 0, 1])
    assert local_degree_multiset(f, Poly([1, 0, 1])) == (1, 1, 1, 1)
    with pytest.raises(NotAConjugacyClassError):
        local_degree_multiset(f, Poly([-1, 0, 1]))


# -- portraits -------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 5])
def test_portrait_of_power(n):
    P = portrait(ratfunc([0] * n + [1]))
    assert [(str(c.point), c.local_degrees) for c in P.classes] == [("0", (n,)), ("oo", (n,))]


def test_portrait_of_flagship(V):
    P = portrait(V)
    got = {str(c.point): c.local_degrees for c in P.classes}
    assert got == {"0": (3, 1), "-1": (2, 1, 1), "oo": (4,)}
    assert P.riemann_hurwitz_total() == 2 * 4 - 2


def _numeric_portrait(f, dps=60):
    """Independent oracle: sympy squarefree parts, mpmath roots, clustering by value."""
    P, Q = sympy.fraction(sympy.cancel(_sym(f)))
    d = max(sympy.degree(P, z), sympy.degree(Q, z))
    W = sympy.expand(sympy.diff(P, z) * Q - P * sympy.diff(Q, z))
    rows = []
    with mpmath.workdps(dps):
        _, parts = sympy.sqf_list(W, z)
        for g, mult in parts:
            coeffs = [mpmath.mpf(sympy.Rational(c).p) / sympy.Rational(c).q
                      for c in sympy.Poly(g, z).all_coeffs()]
            if len(coeffs) == 1:
                continue
            for r in mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps):
                qv = _peval(Q, r)
                val = INF if abs(qv) < TOL else _peval(P, r) / qv
                rows.append((val, mult + 1))
        # the source point at infinity, through z = 1/w
        Fw = sympy.cancel(_sym(f).subs(z, 1 / w))
        Nw, Dw = sympy.fraction(Fw)
        if Dw.subs(w, 0) == 0:
            e = _order_at_zero(Dw)
            val = INF
        else:
            c = Nw.subs(w, 0) / Dw.subs(w, 0)
            e = _order_at_zero(sympy.expand(Nw - c * Dw))
            val = mpmath.mpc(mpmath.mpf(sympy.Rational(c).p) / sympy.Rational(c).q)
        if e > 1:
            rows.append((val, e))
    groups = []
    for val, e in rows:
        for g in groups:
            if (g[0] is INF) == (val is INF) and (val is INF or abs(g[0] - val) < TOL):
                g[1].append(e)
                break
        else:
            groups.append([val, [e]])
    return d, [(v, tuple(sorted(es))) for v, es in groups]


def _order_at_zero(p):
    p = sympy.Poly(p, w)
    return min(m[0] for m in p.monoms())


def _peval(p, r):
    return mpmath.polyval([mpmath.mpf(sympy.Rational(c).p) / sympy.Rational(c).q
                           for c in sympy.Poly(p, z).all_coeffs()], r)


def _sym(f):
    def p(poly):
        return sum(sympy.Rational(c.rational_value().numerator, c.rational_value().denominator)
                   * z ** k for k, c in enumerate(poly.c))
    return p(f.num) / p(f.den)


def _exact_points(f, dps=60):
    out = []
    with mpmath.workdps(dps):
        for c in portrait(f).classes:
            degs = tuple(sorted(e for e in c.local_degrees if e > 1))
            if c.point.is_infinity:
                out.append((INF, degs))
                continue
            m = c.point.minpoly
            coeffs = [mpmath.mpf(x.rational_value().numerator) / x.rational_value().denominator
                      for x in reversed(m.c)]
            roots = [coeffs[1] * -1] if m.degree == 1 else mpmath.polyroots(
                coeffs, maxsteps=400, extraprec=4 * dps)
            out.extend((mpmath.mpc(r), degs) for r in roots)
    return out


def _same_portrait(exact, numeric):
    remaining = list(numeric)
    for val, degs in exact:
        for j, (v2, d2) in enumerate(remaining):
            close = (val is INF and v2 is INF) or (
                val is not INF and v2 is not INF and abs(val - v2) < TOL)
            if close and degs == d2:
                del remaining[j]
                break
        else:
            return False
    return not remaining


@given(rational_maps(2, 6))
def test_numeric_portrait_oracle(f):
    _, numeric = _numeric_portrait(f)
    assert _same_portrait(_exact_points(f), numeric)


def test_numeric_oracle_on_flagship(V):
    _, numeric = _numeric_portrait(V)
    assert _same_portrait(_exact_points(V), numeric)


@given(rational_maps(2, 6))
def test_riemann_hurwitz(f):
    P = portrait(f)
    assert P.riemann_hurwitz_total() == 2 * f.degree - 2
    for c in P.classes:
        assert sum(c.local_degrees) == f.degree


# -- orbifolds -------------------------------------------------------------

def test_orbifold_flagship(V):
    O = orbifold_O2(V)
    assert {str(pc): nu for pc, nu in O.points} == {"0": 3, "-1": 2, "oo": 4}
    assert O.signature() == (2, 3, 4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_orbifold_of_power(n):
    assert orbifold_O2(ratfunc([0] * n + [1])).signature() == (n, n)


def test_theta_portrait():
    O = orbifold_O2(octahedral_theta())
    assert O.signature() == (2, 3, 4)


@given(rational_maps(2, 5), moebius_maps(), moebius_maps())
def test_signature_moebius_invariant(f, m1, m2):
    g = m1.as_ratfunc().compose(f).compose(m2.as_ratfunc())
    assert orbifold_O2(g).signature() == orbifold_O2(f).signature()


@pytest.mark.parametrize("n", [2, 5])
def test_source_orbifold_of_power_is_trivial(n):
    assert orbifold_O1(ratfunc([0] * n + [1])).points == ()


def test_source_orbifold_flagship(V):
    O1 = orbifold_O1(V)
    got = {str(pc): nu for pc, nu in O1.points}
    assert got == {"4/3": 3, str(PointClass.conjugate(Poly([1, 2, 3]))): 2}


def test_source_orbifold_of_quadratic_chebyshev():
    assert orbifold_O1(T(2)).points == ()


def test_euler_characteristic_values():
    assert euler_characteristic(Orbifold()) == 2
    assert euler_characteristic(Orbifold.from_values([(0, 2), (1, 3), (INF, 4)])) == Fraction(1, 12)
    assert euler_characteristic(Orbifold.from_values([(0, 2), (1, 2), (-1, 2), (INF, 2)])) == 0


def test_covering_flagship(V):
    assert is_covering_map(V, orbifold_O1(V), orbifold_O2(V))


def test_covering_identity_mismatch():
    z1 = RatFunc.identity()
    assert not is_covering_map(z1, Orbifold(), Orbifold.from_values([(0, 2), (INF, 2)]))


def test_covering_square():
    O2 = Orbifold.from_values([(0, 2), (INF, 2)])
    assert is_covering_map(ratfunc([0, 0, 1]), Orbifold(), O2)


@given(rational_maps(2, 5))
def test_covering_always_holds(f):
    assert is_covering_map(f, orbifold_O1(f), orbifold_O2(f))
