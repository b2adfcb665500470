"""Pairs (A, B) with A o V = V o B and their certificates."""

from .certificate import SemiconjugacyCertificate, SpotSample, spot_check, verify_semiconjugacy
from .chebyshev import (CHEBYSHEV, ZHUKOVSKI, Decomposition, chebyshev,
                        construct_pair_power_dihedral, decompose_dihedral, decompose_power,
                        power_map, zhukovski)
from .construct import NOT_CONSTRUCTED, PartialConstruction, construct_pair
from .fiberalg import phi_fiber_decomposition
from .lattes import (DivisionPolynomials, YPoly, construct_pair_euclid2222,
                     division_polynomials, lattes_from_points, lattes_map)
from .spherical import (EquivariantData, a4_data, construct_pair_s4, cyclotomic12,
                        equivariant_quintic, klein_group_A4, klein_group_S4,
                        octahedral_theta, right_factor, s4_data, solve_A_from_theta,
                        tetrahedral_theta)

__all__ = [
    "SemiconjugacyCertificate", "SpotSample", "spot_check", "verify_semiconjugacy",
    "CHEBYSHEV", "ZHUKOVSKI", "Decomposition", "chebyshev", "power_map", "zhukovski",
    "decompose_power", "decompose_dihedral", "construct_pair_power_dihedral",
    "construct_pair", "PartialConstruction", "NOT_CONSTRUCTED", "phi_fiber_decomposition",
    "DivisionPolynomials", "YPoly", "division_polynomials", "lattes_map", "lattes_from_points",
    "construct_pair_euclid2222", "EquivariantData", "s4_data", "a4_data", "klein_group_S4",
    "klein_group_A4", "solve_A_from_theta", "right_factor", "construct_pair_s4",
    "octahedral_theta", "tetrahedral_theta", "equivariant_quintic", "cyclotomic12",
]
