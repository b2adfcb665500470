import random

import mpmath
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fiberfield.classifier import EllipticCurve
from fiberfield.errors import (BasisDegenerateError, ConstructionNotImplemented,
                               NotALeftFactorError, NotCoprimeError)
from fiberfield.exact import INF, QQ, Moebius, Poly, RatFunc, gaussian_field, ratfunc
from fiberfield.ramification import is_covering_map, orbifold_O2
from fiberfield.semiconj import (PartialConstruction, chebyshev, construct_pair,
                                 construct_pair_euclid2222, construct_pair_power_dihedral,
                                 construct_pair_s4, decompose_dihedral, decompose_power,
                                 division_polynomials, equivariant_quintic, klein_group_S4,
                                 lattes_from_points, lattes_map, octahedral_theta,
                                 phi_fiber_decomposition, right_factor, s4_data,
                                 solve_A_from_theta, tetrahedral_theta, verify_semiconjugacy,
                                 zhukovski)

from conftest import moebius_maps


def T(n):
    return RatFunc.from_poly(chebyshev(n))


def power(n):
    return ratfunc([0] * n + [1])


# -- Chebyshev and power maps ------------------------------------------------

def test_chebyshev_small():
    assert chebyshev(1) == Poly([0, 1])
    assert chebyshev(2) == Poly([-1, 0, 2])


def test_chebyshev_six_is_composite():
    assert chebyshev(6) == chebyshev(2).compose(chebyshev(3))


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_chebyshev_commutation(m, n):
    assert T(m).compose(T(n)) == T(m * n) == T(n).compose(T(m))


def test_chebyshev_is_cosine_multiple():
    with mpmath.workdps(40):
        for n in range(1, 8):
            t = mpmath.mpf("0.3")
            assert abs(chebyshev(n).eval_mpc(mpmath.cos(t)) - mpmath.cos(n * t)) < 1e-35


def test_decompose_cube():
    d = decompose_power(power(3))
    assert (d.n, d.mu.as_ratfunc()) == (3, RatFunc.identity())


def test_decompose_square_of_moebius():
    V = ratfunc([1, 2, 1], [1, -2, 1])
    d = decompose_power(V)
    assert d.n == 2 and d.mu.as_ratfunc() == ratfunc([1, 1], [-1, 1])
    assert d.recompose() == V


def test_decompose_scaled_square():
    d = decompose_power(ratfunc([0, 0, 4]))
    assert d.n == 2 and d.mu.as_ratfunc() == ratfunc([0, 2])


@given(st.integers(2, 5), moebius_maps(), moebius_maps())
def test_decompose_power_recomposes(n, m1, m2):
    V = m1.as_ratfunc().compose(power(n)).compose(m2.as_ratfunc())
    d = decompose_power(V)
    assert d.n == n
    assert d.recompose() == V


def test_decompose_chebyshev():
    d = decompose_dihedral(T(3))
    assert (d.kind, d.n, d.mu.as_ratfunc()) == ("Chebyshev", 3, RatFunc.identity())


def test_decompose_zhukovski():
    d = decompose_dihedral(zhukovski(2))
    assert (d.kind, d.n, d.mu.as_ratfunc()) == ("Zhukovski", 2, RatFunc.identity())


def test_decompose_shifted_chebyshev():
    V = T(2).compose(ratfunc([5, 1]))
    d = decompose_dihedral(V)
    assert (d.kind, d.n) == ("Chebyshev", 2)
    assert d.mu.as_ratfunc() == ratfunc([5, 1])
    assert d.recompose() == V


@given(st.integers(3, 5), moebius_maps(), moebius_maps())
def test_decompose_dihedral_recomposes(n, m1, m2):
    V = m1.as_ratfunc().compose(T(n)).compose(m2.as_ratfunc())
    d = decompose_dihedral(V)
    assert (d.kind, d.n) == ("Chebyshev", n)
    assert d.recompose() == V


def test_pair_for_power():
    c = construct_pair_power_dihedral(power(4), 3)
    assert c.A == power(3) and c.B == power(3)
    assert c.identity_checked and c.valid


def test_pair_for_conjugated_chebyshev():
    mu = Moebius(2, 1, 1, 3).as_ratfunc()
    mu_inv = Moebius(2, 1, 1, 3).inverse().as_ratfunc()
    c = construct_pair_power_dihedral(T(3).compose(mu), 2)
    assert c.A == T(2)
    assert c.B == mu_inv.compose(T(2)).compose(mu)
    assert c.valid


def test_pair_requires_coprime_degrees():
    with pytest.raises(NotCoprimeError):
        construct_pair_power_dihedral(power(2), 2)


@given(st.integers(2, 5), moebius_maps())
def test_dihedral_pairs_have_equal_degrees(n, mu):
    c = construct_pair(T(n).compose(mu.as_ratfunc()))
    assert c.A.degree == c.B.degree
    assert c.degrees_coprime and c.identity_checked


# -- octahedral data ---------------------------------------------------------

def test_quintic_commutes_with_rotation():
    K = gaussian_field()
    i = K.gen()
    F = equivariant_quintic().over(K)
    iz = ratfunc([0, i], field=K)
    assert F.compose(iz) == iz.compose(F)


def test_theta_degree_and_orbifold():
    theta = octahedral_theta()
    assert theta.degree == 24
    assert orbifold_O2(theta).signature() == (2, 3, 4)


def test_group_has_24_elements_with_identity():
    G = klein_group_S4()
    assert len(G) == 24
    assert len({s.as_ratfunc() for s in G}) == 24
    assert any(s.is_identity() for s in G)


def test_theta_invariance_and_equivariance():
    d = s4_data()
    K = gaussian_field()
    theta, F = d.theta.over(K), d.F.over(K)
    for s in klein_group_S4():
        f = s.as_ratfunc()
        assert theta.compose(f) == theta
        assert F.compose(f) == f.compose(F)


def test_solve_A_trivial():
    assert solve_A_from_theta(power(2), power(3)) == power(3)


def test_solve_A_octahedral(A):
    d = s4_data()
    assert solve_A_from_theta(d.theta, d.F, 5) == A


def test_solve_A_chebyshev():
    assert solve_A_from_theta(T(3), T(2)) == T(2)


def test_solve_A_recomposes():
    d = s4_data()
    A = solve_A_from_theta(d.theta, d.F, 5)
    assert A.compose(d.theta) == d.theta.compose(d.F)


def test_right_factor_trivial():
    assert right_factor(power(6), power(2)) == power(3)


def test_right_factor_chebyshev():
    assert right_factor(T(6), T(2)) == T(3)


def displayed_right_factor():
    K = gaussian_field()
    i = K.gen()
    num = Poly([(1 - i) / 6, -i / 3, (1 + i) / 6], K) * Poly([1, -2, 2, 2, 1], K)
    return RatFunc(num, Poly([0, -1, 0, 0, 0, 1], K))


def test_right_factor_flagship(V):
    theta = octahedral_theta()
    H = right_factor(theta, V)
    K = H.field
    assert H.degree == 6
    assert V.over(K).compose(H) == theta.over(K)
    Hd = displayed_right_factor()
    assert V.over(K).compose(Hd) == theta.over(K)
    # the two differ by precomposition with a deck transformation of theta
    assert any(Hd.compose(s.as_ratfunc()) == H for s in klein_group_S4())


def test_construct_s4_flagship(A, V, B):
    c = construct_pair_s4(V)
    assert c.A == A and c.B == B
    assert c.valid
    assert A.compose(V) == V.compose(B)


def test_construct_s4_on_theta():
    theta = octahedral_theta()
    c = construct_pair_s4(theta)
    assert c.identity_checked and c.degrees_coprime
    # the right factor is a deck transformation, here the identity
    assert c.B == equivariant_quintic()


def test_construct_s4_tetrahedral():
    c = construct_pair_s4(tetrahedral_theta())
    assert c.valid
    assert c.A.field == QQ


def test_construct_s4_rejects_degree_seven():
    with pytest.raises(NotALeftFactorError):
        construct_pair_s4(power(7))


# -- Lattes maps -------------------------------------------------------------

def test_two_division_symbolic():
    # phi_2 and psi_2^2 as polynomials in (a, b): check on a grid dense enough
    # to pin down polynomials of degree <= 3 in each variable
    for a in range(-2, 3):
        for b in range(-2, 3):
            if 4 * a ** 3 + 27 * b ** 2 == 0:
                continue
            d = division_polynomials(EllipticCurve(a, b), 2)
            assert d.phi == Poly([a * a, -8 * b, -2 * a, 0, 1])
            assert d.psi_sq == Poly([4 * b, 4 * a, 0, 4])


def test_two_division_against_group_law():
    a, b, x = sympy.symbols("a b x")
    y2 = x ** 3 + a * x + b
    lam2 = (3 * x ** 2 + a) ** 2 / (4 * y2)
    assert sympy.cancel(lam2 - 2 * x - (x ** 4 - 2 * a * x ** 2 - 8 * b * x + a ** 2)
                        / (4 * x ** 3 + 4 * a * x + 4 * b)) == 0


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_lattes_degree(m):
    assert lattes_map((2, 3), m).degree == m * m


def _add(P, Q, a):
    (x1, y1), (x2, y2) = P, Q
    lam = (3 * x1 ** 2 + a) / (2 * y1) if P == Q else (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    return x3, lam * (x1 - x3) - y1


def test_triple_against_group_law():
    rng = random.Random(3)
    a, b = 2, 3
    L3 = lattes_map((a, b), 3)
    with mpmath.workprec(200):
        for _ in range(20):
            x = mpmath.mpf(rng.randint(-30, 30)) / rng.randint(1, 9)
            y = mpmath.sqrt(mpmath.mpc(x ** 3 + a * x + b))  # a point over Q(sqrt d)
            P = (mpmath.mpc(x), y)
            P3 = _add(_add(P, P, a), P, a)
            assert abs(P3[0] - L3.eval_mpc(P[0], 200)) < mpmath.mpf(2) ** -120


def test_lattes_commute():
    E = EllipticCurve(-1, 0)
    L2, L3 = lattes_map(E, 2), lattes_map(E, 3)
    assert L2.compose(L3) == L3.compose(L2)


def test_euclid2222_pair_on_lattes():
    # the [3]-map has all four 2-torsion x-values as critical values
    V = lattes_map((0, 1), 3)
    A = construct_pair_euclid2222(V, 2)
    assert A == lattes_map((0, 1), 2)
    assert A.compose(V) == V.compose(A)


def test_euclid2222_from_marked_points():
    A = lattes_from_points([0, 1, -1, INF], 2, QQ)
    assert A == lattes_map((-1, 0), 2)


def test_euclid2222_conjugated_lattes_is_covering():
    mu = ratfunc([1, 2], [3, 1])
    W = mu.compose(lattes_map((2, 3), 3)).compose(ratfunc([-1, 3], [-2, 1]))
    A = construct_pair_euclid2222(W, 2)
    O = orbifold_O2(W)
    assert A.degree == 4
    assert is_covering_map(A, O, O)


def test_euclid2222_requires_coprime():
    with pytest.raises(NotCoprimeError):
        construct_pair_euclid2222(lattes_map((0, 1), 3), 3)


def test_construct_pair_euclid2222_partial():
    res = construct_pair(lattes_map((2, 3), 3).compose(ratfunc([1, 1], [0, 1])))
    assert isinstance(res, PartialConstruction)
    assert res.A.degree == 4


# -- certificates ------------------------------------------------------------

def test_certificate_golden(A, V, B):
    c = verify_semiconjugacy(A, V, B)
    assert c.identity_checked and c.degrees_coprime
    assert c.spot_check_passed and c.valid


def test_certificate_not_coprime():
    z2 = power(2)
    c = verify_semiconjugacy(z2, z2, z2)
    assert c.identity_checked and not c.degrees_coprime
    assert not c.valid


def test_certificate_chebyshev():
    c = verify_semiconjugacy(T(2), T(3), T(2))
    assert c.identity_checked and c.degrees_coprime


def test_certificate_rejects_wrong_identity(A, V):
    c = verify_semiconjugacy(A, V, power(5))
    assert not c.identity_checked and not c.valid


# -- fiber decomposition -----------------------------------------------------

def test_phi_trivial():
    z = RatFunc.identity()
    P = phi_fiber_decomposition(z, power(2), power(3))
    assert P == [RatFunc.constant(0), z]


def test_phi_chebyshev():
    # 4z^3 - 3z = z (2 (2z^2 - 1) - 1)
    z = RatFunc.identity()
    assert sympy.expand(4 * sympy.Symbol("z") ** 3 - 3 * sympy.Symbol("z")) == sympy.expand(
        sympy.Symbol("z") * (2 * (2 * sympy.Symbol("z") ** 2 - 1) - 1))
    P = phi_fiber_decomposition(z, T(2), T(3))
    assert P == [RatFunc.constant(0), ratfunc([-1, 2])]


@pytest.mark.parametrize("U", [ratfunc([0, 1]), ratfunc([1, 0, 1], [0, 1])],
                         ids=["z", "z+1/z"])
def test_phi_flagship(U, V, B):
    P = phi_fiber_decomposition(U, V, B)
    assert len(P) == 4
    total = RatFunc.constant(0)
    for i, p in enumerate(P):
        term = p.compose(V)
        for _ in range(i):
            term = RatFunc(term.num * U.num, term.den * U.den)
        total = RatFunc(total.num * term.den + term.num * total.den, total.den * term.den)
    assert total == U.compose(B)


def test_phi_basis_degenerate():
    with pytest.raises(BasisDegenerateError):
        phi_fiber_decomposition(power(2), power(4), RatFunc.identity())


# -- dispatch ----------------------------------------------------------------

def test_hyperbolic_not_constructed():
    with pytest.raises(ConstructionNotImplemented) as exc:
        construct_pair(ratfunc([1, 0, 1, 0, 0, 1]))
    assert exc.value.signature_class.tag == "Hyperbolic"


def test_euclid333_not_constructed():
    # y-coordinate of doubling on y^2 = x^3 + 1
    V = ratfunc([-27, 0, 18, 0, 1], [0, 0, 0, 8])
    with pytest.raises(ConstructionNotImplemented) as exc:
        construct_pair(V)
    assert exc.value.signature_class.tag == "Euclid333"


def test_moebius_V():
    c = construct_pair(ratfunc([1, 2], [3, 1]))
    assert c.valid
