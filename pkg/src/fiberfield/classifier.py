"""Signature classes, genus buckets and the fiber-field decisions."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NoUniversalCoveringError, SingularCurveError
from .exact import QQ, NFElem, Poly, factor
from .ramification import Orbifold, PointClass, euler_characteristic, orbifold_O2

SPHERICAL = "spherical"
EUCLIDEAN = "euclidean"
HYPERBOLIC = "hyperbolic"

_FIXED = {
    (2, 3, 3): ("Tetrahedral", SPHERICAL),
    (2, 3, 4): ("Octahedral", SPHERICAL),
    (2, 3, 5): ("Icosahedral", SPHERICAL),
    (3, 3, 3): ("Euclid333", EUCLIDEAN),
    (2, 4, 4): ("Euclid244", EUCLIDEAN),
    (2, 3, 6): ("Euclid236", EUCLIDEAN),
    (2, 2, 2, 2): ("Euclid2222", EUCLIDEAN),
}


@dataclass(frozen=True)
class SignatureClass:
    tag: str
    n: int = None
    geometry: str = SPHERICAL

    def __str__(self):
        return f"{self.tag}({self.n})" if self.n is not None else self.tag


def _signature(O):
    if isinstance(O, Orbifold):
        return O.signature()
    return tuple(sorted(int(x) for x in O))


def signature_class(O):
    """Classify an orbifold (or a bare signature) by its weights."""
    sig = _signature(O)
    if not sig:
        return SignatureClass("Unramified", None, SPHERICAL)
    if len(sig) == 1 or (len(sig) == 2 and sig[0] != sig[1]):
        raise NoUniversalCoveringError(sig)
    if len(sig) == 2:
        return SignatureClass("NN", sig[0], SPHERICAL)
    if len(sig) == 3 and sig[0] == sig[1] == 2:
        return SignatureClass("TwoTwoN", sig[2], SPHERICAL)
    if sig in _FIXED:
        tag, geom = _FIXED[sig]
        return SignatureClass(tag, None, geom)
    return SignatureClass("Hyperbolic", None, HYPERBOLIC)


def signature_euler_characteristic(sig):
    return 2 + sum(Fraction(1, nu) - 1 for nu in sig)


GENUS_0 = "0"
GENUS_1 = "1"
GENUS_2_PLUS = ">=2"


def genus_bucket_of(O):
    chi = euler_characteristic(O)
    if chi > 0:
        return GENUS_0
    if chi == 0:
        return GENUS_1
    return GENUS_2_PLUS


def genus_bucket(V):
    """Genus bucket of the Galois closure of V, read off chi(O2)."""
    return genus_bucket_of(orbifold_O2(V))


def has_infinitely_many_fiber_values(V):
    """True iff infinitely many fibers of V lie in a single number field."""
    return euler_characteristic(orbifold_O2(V)) >= 0


@dataclass(frozen=True)
class Classification:
    orbifold: Orbifold
    signature: tuple
    chi: Fraction
    signature_class: SignatureClass
    genus_bucket: str
    decision: bool


def classify(V):
    O = orbifold_O2(V)
    chi = euler_characteristic(O)
    return Classification(O, O.signature(), chi, signature_class(O), genus_bucket_of(O), chi >= 0)


# ---------------------------------------------------------------------------
# elliptic curves y^2 = x^3 + a x + b

@dataclass(frozen=True)
class EllipticCurve:
    a: NFElem
    b: NFElem

    def __init__(self, a, b, field=None):
        K = field
        if K is None:
            K = a.field if isinstance(a, NFElem) else (b.field if isinstance(b, NFElem) else QQ)
        a, b = K.element(a), K.element(b)
        if not (4 * a ** 3 + 27 * b ** 2):
            raise SingularCurveError("4a^3 + 27b^2 = 0: the curve is singular")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def field(self):
        return self.a.field

    def cubic(self):
        K = self.field
        return Poly([self.b, self.a, 0, 1], K)

    def discriminant(self):
        return -16 * (4 * self.a ** 3 + 27 * self.b ** 2)


def _y_fiber_degrees(E, d):
    """Local degrees of the y-coordinate map over one root of d (monic, irreducible).

    The fiber over y = t consists of the points (x, t) with x a root of
    x^3 + a x + (b - t^2).  It depends on s = t^2 only, and x determines s,
    so conjugates are folded through the minimal polynomial m of s:
    M(x) = m(x^3 + a x + b) has the fiber multiplicities as root multiplicities.
    """
    K = E.field
    even = Poly(d.c[0::2], K)
    odd = Poly(d.c[1::2], K)
    # prod over roots t of d of (s - t^2), up to sign
    m = (even * even - (odd * odd).shift_up(1)).squarefree_part()
    M = m.compose(E.cubic())
    k = m.degree
    out = []
    for g, e in M.squarefree_decomposition():
        out.extend([e] * (g.degree // k))
    return tuple(sorted(out, reverse=True))


def elliptic_y_orbifold(E):
    """O2 of the degree-3 map (x, y) -> y on E."""
    K = E.field
    a, b = E.a, E.b
    # x^3 + a x + c has a repeated root iff 4a^3 + 27c^2 = 0, with c = b - y^2
    c = Poly([b, 0, -1], K)
    D = c * c * 27 + Poly.const(4 * a ** 3, K)
    pts = [(PointClass.infinity(), 3)]
    _, facs = factor(D.squarefree_part())
    for f, _ in facs:
        degs = _y_fiber_degrees(E, f)
        nu = lcm(*degs)
        if nu > 1:
            pts.append((PointClass(f), nu))
    return Orbifold(tuple(pts))


def elliptic_y_fiber_decision(E):
    """(decision, witness orbifold), read off the Euler characteristic of the orbifold."""
    O = elliptic_y_orbifold(E)
    return euler_characteristic(O) >= 0, O


X_FIBER_RATIONALE = ("the x-coordinate is a degree-2 map, hence Galois; its normalization "
                     "is the curve itself, of genus 1")


def elliptic_x_orbifold(E):
    """O2 of the degree-2 map (x, y) -> x: weight 2 over the roots of the cubic and INF."""
    _, facs = factor(E.cubic())
    pts = [(PointClass(f), 2) for f, _ in facs]
    pts.append((PointClass.infinity(), 2))
    return Orbifold(tuple(pts))


def elliptic_x_fiber_decision(E):
    O = elliptic_x_orbifold(E)
    return euler_characteristic(O) >= 0


__all__ = [
    "SignatureClass", "signature_class", "genus_bucket", "genus_bucket_of",
    "has_infinitely_many_fiber_values", "classify", "Classification", "EllipticCurve",
    "elliptic_y_fiber_decision", "elliptic_x_fiber_decision", "elliptic_y_orbifold",
    "elliptic_x_orbifold", "X_FIBER_RATIONALE", "GENUS_0", "GENUS_1", "GENUS_2_PLUS",
    "signature_euler_characteristic", "SPHERICAL", "EUCLIDEAN", "HYPERBOLIC",
]
