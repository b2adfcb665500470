"""Exact coefficient arithmetic: Q, simple number fields, polynomials,
rational functions and Moebius maps."""

from fractions import Fraction as Rat

from .factor import factor, factor_rational, is_irreducible, roots_in_field
from .infinity import INF, is_inf
from .moebius import (Moebius, moebius_apply, moebius_inverse, moebius_sending,
                      moebius_through_three_points)
from .numberfield import QQ, NFElem, NumberField, gaussian_field
from .poly import Poly, interpolate
from .ratfunc import RatFunc, ratfunc, rf_compose, rf_derivative, rf_normalize, rf_z


def poly_squarefree_decomposition(p):
    return p.squarefree_decomposition()


def poly_factor_rationals(p):
    """Monic Q-irreducible factors with multiplicities (leading constant dropped)."""
    return factor_rational(p)[1]


__all__ = [
    "Rat", "QQ", "NFElem", "NumberField", "gaussian_field", "Poly", "interpolate",
    "RatFunc", "ratfunc", "rf_normalize", "rf_compose", "rf_derivative", "rf_z",
    "Moebius", "moebius_apply", "moebius_inverse", "moebius_through_three_points",
    "moebius_sending", "INF", "is_inf", "factor", "factor_rational", "is_irreducible",
    "roots_in_field", "poly_squarefree_decomposition", "poly_factor_rationals",
]
