from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fiberfield.exact import INF, RatFunc, gaussian_field, ratfunc
from fiberfield.numeric import chordal
from fiberfield.orbit import (NoRepetition, Preperiodic, fiber_track, forward_orbit,
                              klein_fiber_exact, log_height, numeric_orbit,
                              preperiodicity_scan)
from fiberfield.semiconj import chebyshev, klein_group_S4, lattes_map, octahedral_theta

from conftest import nonzero_rationals, small_rationals


def T(n):
    return RatFunc.from_poly(chebyshev(n))


def values(orbit):
    return [y if y is INF else y.rational_value() for y in orbit]


# -- exact orbits ------------------------------------------------------------

def test_orbit_of_square():
    assert values(forward_orbit(ratfunc([0, 0, 1]), 2, 3)) == [2, 4, 16, 256]


# frozen from term-by-term sympy evaluation of the degree-5 map at y0 = 1
GOLDEN_ORBIT = [
    Fraction(1),
    Fraction(-493039, 1874161),
    Fraction(-1135018759756404446896810365467191, 28118433704266423162769319081417609),
]


def test_orbit_of_golden_map(A):
    orbit = values(forward_orbit(A, 1, 3))
    assert orbit[:3] == GOLDEN_ORBIT
    z = sympy.symbols("z")
    expr = (z ** 2 * (z ** 3 - 240 * z ** 2 + 19200 * z - 512000)
            / (625 * z ** 4 + 16000 * z ** 3 + 153600 * z ** 2 + 655360 * z + 1048576))
    y = sympy.Rational(GOLDEN_ORBIT[2].numerator, GOLDEN_ORBIT[2].denominator)
    v = expr.subs(z, y)
    assert orbit[3] == Fraction(int(sympy.numer(v)), int(sympy.denom(v)))


def test_orbit_of_lattes_doubling():
    # P = (2, 3) on y^2 = x^3 + 1: [2]P = (0, -1), which has order 3
    assert values(forward_orbit(lattes_map((0, 1), 2), 2, 3)) == [2, 0, 0, 0]


def test_orbit_through_infinity():
    A = ratfunc([1], [0, 1])     # 1/z
    assert values(forward_orbit(A, 0, 3)) == [0, INF, 0, INF]


@given(nonzero_rationals, st.sampled_from(["golden", "cheb", "square"]))
def test_exact_and_numeric_orbits_agree(y0, which):
    A = {"golden": ratfunc([0, 0, -512000, 19200, -240, 1],
                           [1048576, 655360, 153600, 16000, 625]),
         "cheb": T(2), "square": ratfunc([0, 0, 1])}[which]
    prec = 256
    n = 6 if which == "golden" else 4
    exact = forward_orbit(A, y0, n)
    numeric = numeric_orbit(A, exact[0], n, prec)
    tol = mpmath.mpf(2) ** (-prec + 8)
    for e, v in zip(exact, numeric):
        if e is INF:
            assert v is INF
        else:
            assert chordal(e.to_mpc(prec + 64), v) < tol


def test_heights_grow_along_golden_orbit(A):
    heights = [log_height(y) for y in forward_orbit(A, 1, 8)]
    # recorded behaviour: roughly fivefold growth per step
    assert all(b > a for a, b in zip(heights[1:], heights[2:]))
    assert [int(h) for h in heights] == [1, 21, 115, 593, 2981, 14924, 74639, 373213, 1866085]


# -- preperiodicity ----------------------------------------------------------

@pytest.mark.parametrize("A,y0,expected", [
    (ratfunc([0, 0, 1]), 1, Preperiodic(0, 1)),
    (ratfunc([0, 0, 1]), -1, Preperiodic(1, 1)),
    (ratfunc([-1, 0, 1]), 0, Preperiodic(0, 2)),
])
def test_preperiodic(A, y0, expected):
    assert preperiodicity_scan(A, y0, 20) == expected


def test_no_repetition():
    assert preperiodicity_scan(ratfunc([0, 0, 1]), 2, 6) == NoRepetition(6)


# -- fiber transport -------------------------------------------------------

def test_golden_fiber_transport(A, V, B):
    tr = fiber_track(V, A, B, 1, 10, 256)
    assert tr.all_bijective
    assert tr.fiber_sizes() == [4] * 11
    assert tr.max_residual < mpmath.mpf(2) ** -128


def test_transport_of_square_roots():
    z2 = ratfunc([0, 0, 1])
    tr = fiber_track(z2, z2, z2, 4, 3)
    first = sorted(tr.fibers[0], key=lambda p: p.real)
    assert [abs(p - q) < 1e-60 for p, q in zip(first, [-2, 2])] == [True, True]
    second = sorted(tr.fibers[1], key=lambda p: p.real)
    assert [abs(p - q) < 1e-60 for p, q in zip(second, [-4, 4])] == [True, True]
    # B(2) = B(-2): the degrees are not coprime and bijectivity fails
    assert not any(tr.bijective_flags)


def test_transport_chebyshev():
    tr = fiber_track(T(3), T(2), T(2), Fraction(1, 3), 8)
    assert tr.all_bijective
    assert tr.fiber_sizes() == [3] * 9


@given(small_rationals)
def test_transport_consistency(y0):
    V, A, B = T(3), T(2), T(2)
    tr = fiber_track(V, A, B, y0, 3, 192)
    tol = mpmath.mpf(2) ** -96
    for i in range(3):
        if i in tr.exceptional_steps:
            continue
        assert len(tr.fibers[i]) == V.degree
        target = A.eval_mpc(tr.y_values[i].to_mpc(192), 192)
        for zeta in tr.fibers[i]:
            image = V.eval_mpc(B.eval_mpc(zeta, 192), 192)
            assert chordal(image, target) < tol


# -- exact octahedral fibers -----------------------------------------------

def test_klein_fiber_generic():
    pts = klein_fiber_exact(2)
    assert len(pts) == 24 and len(set(pts)) == 24
    K = gaussian_field()
    theta = octahedral_theta().over(K)
    assert all(p is not INF and p.field == K for p in pts)
    assert len({theta.evaluate(p) for p in pts}) == 1


def test_klein_fiber_ramified():
    assert 0 < len(klein_fiber_exact(1)) < 24


def test_klein_fiber_at_zero():
    pts = klein_fiber_exact(0)
    assert INF in pts
    assert gaussian_field().zero in pts


@given(small_rationals)
def test_klein_orbit_invariance(a):
    pts = klein_fiber_exact(a)
    assert 24 % len(pts) == 0
    K = gaussian_field()
    theta = octahedral_theta().over(K)
    x = K.element(a)
    assert all(theta.evaluate(s.apply(x)) == theta.evaluate(x) for s in klein_group_S4())
