"""Dispatch from the signature class of V to a construction."""

from dataclasses import dataclass

from ..classifier import signature_class
from ..errors import ConstructionNotImplemented, NotCoprimeError
from ..exact import Moebius, RatFunc
from ..ramification import orbifold_O2
from ._common import conjugate_by, require_coprime, smallest_coprime
from .certificate import verify_semiconjugacy
from .chebyshev import construct_pair_power_dihedral, decompose_dihedral, decompose_power, power_map
from .lattes import construct_pair_euclid2222
from .spherical import construct_pair_s4

NOT_CONSTRUCTED = {
    "Icosahedral": "no equivariant data for the icosahedral group ships with the package",
    "Euclid333": "needs the lattice with complex multiplication by a cube root of unity",
    "Euclid244": "needs the lattice with complex multiplication by i",
    "Euclid236": "needs the lattice with complex multiplication by a sixth root of unity",
    "Hyperbolic": "the orbifold is hyperbolic; no construction applies",
}


@dataclass(frozen=True)
class PartialConstruction:
    """Only A is known: A o V = V o B for some B of the same degree."""

    V: RatFunc
    A: RatFunc
    m: int
    signature_class: object
    note: str


def construct_pair(V, m=None):
    """A certificate for V, or PartialConstruction in the (2,2,2,2) case.

    m defaults to the smallest integer >= 2 coprime to deg V; the spherical
    groups fix m = 5.
    """
    if V.degree == 1:
        m = m or 2
        B = power_map(m, V.field)
        return verify_semiconjugacy(conjugate_by_rf(V, B), V, B,
                                    notes={"construction": "moebius", "m": m})
    sc = signature_class(orbifold_O2(V))
    if sc.tag in NOT_CONSTRUCTED:
        raise ConstructionNotImplemented(sc, NOT_CONSTRUCTED[sc.tag])
    if sc.tag in ("Octahedral", "Tetrahedral"):
        if m not in (None, 5):
            raise NotCoprimeError("the spherical constructions use m = 5")
        return construct_pair_s4(V)
    if m is None:
        m = smallest_coprime(V.degree)
    require_coprime(m, V.degree)
    if sc.tag == "NN":
        return construct_pair_power_dihedral(V, m, decompose_power(V))
    if sc.tag == "TwoTwoN":
        return construct_pair_power_dihedral(V, m, decompose_dihedral(V))
    A = construct_pair_euclid2222(V, m)
    if A.compose(V) == V.compose(A):
        return verify_semiconjugacy(A, V, A, notes={"construction": "lattes", "m": m,
                                                    "B": "A commutes with V"})
    return PartialConstruction(V, A, m, sc,
                               "A is the Lattes map; B is not constructed for general V")


def conjugate_by_rf(V, f):
    """V o f o V^-1 for a degree-1 V."""
    return conjugate_by(Moebius.from_ratfunc(V), f)
