"""Certificates for A o V = V o B and their verification."""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath

from ..exact import INF
from ..numeric import chordal, fiber_points, pairwise_distinct
from ..ramification import critical_value_polynomial


@dataclass(frozen=True)
class SpotSample:
    y0: Fraction
    fiber_size: int
    distinct_images: bool
    max_residual: mpmath.mpf
    ok: bool


@dataclass(frozen=True)
class SemiconjugacyCertificate:
    V: object
    A: object
    B: object
    identity_checked: bool
    degrees_coprime: bool
    bijectivity_spot_check: tuple = ()
    notes: dict = field(default_factory=dict, compare=False)

    @property
    def spot_check_passed(self):
        return all(s.ok for s in self.bijectivity_spot_check)

    @property
    def valid(self):
        return self.identity_checked and self.spot_check_passed


def _numeric_image(f, z, prec):
    if z is INF:
        v = f.evaluate(INF)
        return v if v is INF else v.to_mpc(prec)
    w = f.eval_mpc(z, prec)
    return INF if w is None else w


def _avoids(C, inf_critical, y, field):
    if y is INF:
        return not inf_critical
    return bool(C(field.element(y)))


def _sample_values(V, A, count, seed):
    C, inf_crit = critical_value_polynomial(V) if V.degree >= 2 else (None, False)
    rng = random.Random(seed)
    out = []
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        y = Fraction(rng.randint(-60, 60), rng.randint(1, 25))
        if y in out:
            continue
        if C is not None:
            Ay = A.evaluate(y)
            if not (_avoids(C, inf_crit, y, V.field) and _avoids(C, inf_crit, Ay, V.field)):
                continue
        out.append(y)
    return out


def spot_check(A, V, B, samples=10, prec=256, seed=0):
    """Transport sampled fibers of V through B and compare with the fiber over A(y0)."""
    tol = mpmath.mpf(2) ** (-prec // 2)
    out = []
    for y in _sample_values(V, A, samples, seed):
        with mpmath.workprec(prec):
            fib = fiber_points(V, y, prec)
            imgs = [_numeric_image(B, z, prec) for z in fib]
            distinct = pairwise_distinct(fib, tol) and pairwise_distinct(imgs, tol)
            Ay = A.evaluate(y)
            target = Ay if Ay is INF else Ay.to_mpc(prec)
            res = mpmath.mpf(0)
            for w in imgs:
                res = max(res, chordal(_numeric_image(V, w, prec), target))
        out.append(SpotSample(y, len(fib), distinct, res, distinct and res < tol))
    return tuple(out)


def verify_semiconjugacy(A, V, B, samples=10, prec=256, seed=0, notes=None):
    """Exact identity, coprimality flag and a numeric bijectivity spot check."""
    identity = A.compose(V) == V.compose(B)
    coprime = gcd(B.degree, V.degree) == 1
    spots = spot_check(A, V, B, samples, prec, seed)
    return SemiconjugacyCertificate(V, A, B, identity, coprime, spots, dict(notes or {}))
