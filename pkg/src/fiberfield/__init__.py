"""Exact semiconjugacies A o V = V o B and fiber-field decisions for rational maps."""

from ._kernels import BACKEND
from .classifier import (EllipticCurve, classify, elliptic_x_fiber_decision,
                         elliptic_y_fiber_decision, genus_bucket,
                         has_infinitely_many_fiber_values, signature_class)
from .exact import INF, QQ, Moebius, NumberField, Poly, RatFunc, gaussian_field, ratfunc
from .orbit import fiber_track, forward_orbit, klein_fiber_exact, preperiodicity_scan
from .ramification import euler_characteristic, orbifold_O1, orbifold_O2, portrait
from .semiconj import construct_pair, verify_semiconjugacy

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "INF", "QQ", "Moebius", "NumberField", "Poly", "RatFunc", "gaussian_field",
    "ratfunc", "portrait", "orbifold_O1", "orbifold_O2", "euler_characteristic",
    "classify", "signature_class", "genus_bucket", "has_infinitely_many_fiber_values",
    "EllipticCurve", "elliptic_y_fiber_decision", "elliptic_x_fiber_decision",
    "construct_pair", "verify_semiconjugacy", "forward_orbit", "fiber_track",
    "klein_fiber_exact", "preperiodicity_scan",
]
