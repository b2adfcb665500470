"""High-precision complex root finding and fiber matching.

Roots are found by Aberth-Ehrlich simultaneous iteration started from
circles whose radii come from the upper convex hull of (k, log|a_k|).
Everything runs on mpmath mpc at a caller-chosen binary precision.
"""

import math

import mpmath

from .exact.infinity import INF


def _eval_with_deriv(coeffs, z):
    p = coeffs[-1]
    dp = mpmath.mpc(0)
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _abs_bound(coeffs, z):
    r = abs(z)
    acc = mpmath.mpf(0)
    for c in reversed(coeffs):
        acc = acc * r + abs(c)
    return acc


def _upper_hull(points):
    hull = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def initial_approximations(coeffs, sigma=0.7):
    """Starting points on circles given by the Newton polygon of |a_k|."""
    n = len(coeffs) - 1
    pts = [(k, mpmath.log(abs(c))) for k, c in enumerate(coeffs) if c != 0]
    hull = _upper_hull(pts)
    out = []
    for (k0, l0), (k1, l1) in zip(hull, hull[1:]):
        m = k1 - k0
        r = mpmath.exp((l0 - l1) / m)
        for j in range(m):
            ang = 2 * mpmath.pi * j / m + 2 * mpmath.pi * k0 / n + sigma
            out.append(r * mpmath.expjpi(ang / mpmath.pi))
    return out


def aberth(coeffs, prec=256, maxiter=None):
    """Approximate all roots of sum coeffs[k] z^k.

    Both the leading and the constant coefficient must be nonzero; use
    ``polynomial_roots`` to split off zero roots first.  Returns the list
    of approximations and the number of iterations used.
    """
    n = len(coeffs) - 1
    if n < 1:
        return [], 0
    maxiter = maxiter or (60 + 4 * prec)
    with mpmath.workprec(prec):
        a = [mpmath.mpc(c) for c in coeffs]
        if n == 1:
            return [-a[0] / a[1]], 0
        z = initial_approximations(a)
        eps = mpmath.mpf(2) ** (-prec + 6)
        done = [False] * n
        it = 0
        for it in range(1, maxiter + 1):
            for i in range(n):
                if done[i]:
                    continue
                zi = z[i]
                p, dp = _eval_with_deriv(a, zi)
                if abs(p) <= 4 * eps * _abs_bound(a, zi):
                    done[i] = True
                    continue
                s = mpmath.mpc(0)
                for j in range(n):
                    if j != i:
                        d = zi - z[j]
                        if d != 0:
                            s += 1 / d
                if dp == 0:
                    w = p / (-p * s) if s != 0 else mpmath.mpf(2) ** (-prec // 4)
                else:
                    ratio = p / dp
                    w = ratio / (1 - ratio * s)
                z[i] = zi - w
                if abs(w) <= eps * abs(z[i]):
                    done[i] = True
            if all(done):
                break
        return z, it


def _trim_high(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def polynomial_roots(coeffs, prec=256):
    """Roots with zero roots split off exactly; leading zeros dropped."""
    coeffs = _trim_high(coeffs)
    if not coeffs:
        raise ValueError("zero polynomial")
    low = 0
    while coeffs[low] == 0:
        low += 1
    roots, _ = aberth(coeffs[low:], prec)
    with mpmath.workprec(prec):
        return [mpmath.mpc(0)] * low + roots


def relative_distance(a, b):
    """Scale-aware separation: |a-b| / max(|a|, |b|), inverted for large points."""
    if a is INF or b is INF:
        if a is b:
            return mpmath.mpf(0)
        other = b if a is INF else a
        return 1 / (1 + abs(other))
    ma, mb = abs(a), abs(b)
    if ma > 1 and mb > 1:
        a, b = 1 / a, 1 / b
        ma, mb = abs(a), abs(b)
    m = max(ma, mb)
    if m == 0:
        return mpmath.mpf(0)
    return abs(a - b) / m


def chordal(a, b):
    """Chordal distance on the Riemann sphere; INF allowed."""
    if a is INF and b is INF:
        return mpmath.mpf(0)
    if a is INF or b is INF:
        other = b if a is INF else a
        return 1 / mpmath.sqrt(1 + abs(other) ** 2)
    return abs(a - b) / (mpmath.sqrt(1 + abs(a) ** 2) * mpmath.sqrt(1 + abs(b) ** 2))


def cluster(points, tol):
    """Group approximations whose relative distance is below tol."""
    groups = []
    for p in points:
        for g in groups:
            if relative_distance(p, g[0]) < tol or abs(p - g[0]) < tol ** 2:
                g.append(p)
                break
        else:
            groups.append([p])
    return groups


def _derivative(coeffs, times):
    c = list(coeffs)
    for _ in range(times):
        c = [k * x for k, x in enumerate(c)][1:]
    return c


def roots_with_multiplicity(coeffs, prec=512, tol=None):
    """Distinct roots with multiplicities.

    Clusters Aberth output at ``tol`` (default 2^(-prec/8)), then refines
    each cluster of size m by Newton on the (m-1)-th derivative, where the
    multiple root is simple.
    """
    coeffs = _trim_high(coeffs)
    if tol is None:
        tol = mpmath.mpf(2) ** (-prec // 8)
    with mpmath.workprec(prec):
        a = [mpmath.mpc(c) for c in coeffs]
        approx = polynomial_roots(a, prec)
        out = []
        for g in cluster(approx, tol):
            m = len(g)
            z = sum(g) / m
            if m > 1 and z != 0:
                d = _derivative(a, m - 1)
                for _ in range(2 * int(math.log2(prec)) + 8):
                    p, dp = _eval_with_deriv(d, z)
                    if dp == 0:
                        break
                    step = p / dp
                    z -= step
                    if abs(step) <= mpmath.mpf(2) ** (-prec + 4) * abs(z):
                        break
            out.append((z, m))
        return out


def match_nearest(src, dst, tol):
    """Greedy nearest-neighbour bijection src -> dst.

    Returns (assignment, residuals, ok).  ``ok`` is False when the sets
    differ in size, a residual reaches tol, or the choice is ambiguous
    (some other target lies within tol of the image).
    """
    if len(src) != len(dst):
        return None, [], False
    pairs = sorted(((relative_distance(s, t), i, j)
                    for i, s in enumerate(src) for j, t in enumerate(dst)),
                   key=lambda x: x[0])
    assign = [None] * len(src)
    used = set()
    for d, i, j in pairs:
        if assign[i] is None and j not in used:
            assign[i] = j
            used.add(j)
    residuals = [chordal(src[i], dst[assign[i]]) for i in range(len(src))]
    ok = True
    for i, s in enumerate(src):
        if relative_distance(s, dst[assign[i]]) >= tol:
            ok = False
        for j, t in enumerate(dst):
            if j != assign[i] and relative_distance(s, t) < tol:
                ok = False
    return assign, residuals, ok


def pairwise_distinct(points, tol):
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if relative_distance(points[i], points[j]) < tol:
                return False
    return True



def fiber_points(V, y, prec=256):
    """Numeric fiber V^-1(y) with multiplicity.

    y is exact (field element or INF) or an mpc; points over INF appear as
    INF.  For exact y the vanishing of top coefficients is decided exactly.
    """
    n = V.degree
    P, Q = V.forms(n)
    exact = not isinstance(y, (mpmath.mpc, mpmath.mpf))
    if exact and y is not INF:
        y = V.field.element(y)
    wp = prec + 32
    with mpmath.workprec(wp):
        if y is INF:
            coeffs = [q.to_mpc(wp) for q in Q]
        else:
            yn = y.to_mpc(wp) if exact else y
            coeffs = [p.to_mpc(wp) - yn * q.to_mpc(wp) for p, q in zip(P, Q)]
            k = n
            while exact and k >= 0 and not (P[k] - y * Q[k]):
                coeffs[k] = mpmath.mpc(0)
                k -= 1
        deg = len(_trim_high(coeffs)) - 1
        roots = polynomial_roots(coeffs, prec) if deg > 0 else []
    return roots + [INF] * (n - max(deg, 0))
