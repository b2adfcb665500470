"""Writing U o B in the basis 1, U, ..., U^(n-1) over C(V).

Each fiber V = t is the algebra K[z]/(P - tQ); there U o B is solved for
as a combination of powers of U, which gives the coefficients P_i(t) at
that t.  Rational reconstruction in t over many fibers and an exact final
identity check produce the P_i.
"""

from ..errors import BasisDegenerateError
from ..exact import Poly, RatFunc, rf_normalize
from ..exact.linalg import nullspace, solve


def rf_add(f, g):
    return rf_normalize(f.num * g.den + g.num * f.den, f.den * g.den)


def rf_mul(f, g):
    return rf_normalize(f.num * g.num, f.den * g.den)


def _inverse_mod(a, M):
    """a^-1 mod M, or None when they share a factor."""
    r0, r1 = M, a % M
    s0, s1 = Poly._raw(M.field, ()), Poly.const(1, M.field)
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        return None
    return (s0.scale(r0.lc().inverse())) % M


def _residue(f, M):
    inv = _inverse_mod(f.den, M)
    if inv is None:
        return None
    return (f.num * inv) % M


def _coefficients_at(W, U, V, t, n):
    """c with W = sum c_i U^i in K[z]/(P - tQ), or None if t is degenerate."""
    K = V.field
    M = V.num - V.den.scale(t)
    if M.degree != n:
        return None, False
    u = _residue(U, M)
    w = _residue(W, M)
    if u is None or w is None:
        return None, False
    powers = [Poly.const(1, K)]
    for _ in range(n - 1):
        powers.append((powers[-1] * u) % M)
    rows = [[p.coeff(r) for p in powers] for r in range(n)]
    c = solve(rows, [w.coeff(r) for r in range(n)], K)
    if c is None or nullspace(rows, K, n):
        return None, True
    return c, False


def _reconstruct(ts, vals, D, K):
    """a/b with deg a, deg b <= D through the first 2D+2 points, or None."""
    k = 2 * D + 2
    rows = []
    for t, v in zip(ts[:k], vals[:k]):
        rows.append([t ** j for j in range(D + 1)] + [-v * t ** j for j in range(D + 1)])
    ns = nullspace(rows, K, 2 * D + 2)
    for vec in ns:
        a, b = Poly(vec[:D + 1], K), Poly(vec[D + 1:], K)
        if not b:
            continue
        if all(b(t) and a(t) / b(t) == v for t, v in zip(ts, vals)):
            return RatFunc(a, b)
    return None


def phi_fiber_decomposition(U, V, B, max_degree=None):
    """Rational functions P_0..P_{n-1} with U o B = sum P_i(V) U^i."""
    n = V.degree
    K = V.field
    W = U.compose(B)
    if max_degree is None:
        max_degree = W.degree + (n - 1) * U.degree + n + 2
    target = 2 * max_degree + 6
    ts, vals = [], []
    degenerate = 0
    j = 1
    while len(ts) < target:
        j += 1
        t = K.element(j if j % 2 else -j // 2)
        c, bad_basis = _coefficients_at(W, U, V, t, n)
        if c is None:
            degenerate += bad_basis
            if degenerate >= 3 and not ts:
                raise BasisDegenerateError()
            continue
        ts.append(t)
        vals.append(c)
    out = []
    for i in range(n):
        col = [v[i] for v in vals]
        for D in range(max_degree + 1):
            f = _reconstruct(ts, col, D, K)
            if f is not None:
                out.append(f)
                break
        else:
            raise BasisDegenerateError("coefficient reconstruction failed")
    total = RatFunc.constant(0, K)
    Ui = RatFunc.constant(1, K)
    for i, P in enumerate(out):
        total = rf_add(total, rf_mul(P.compose(V), Ui))
        Ui = rf_mul(Ui, U)
    if total != W:
        raise BasisDegenerateError("reconstructed coefficients fail the exact identity")
    return out
