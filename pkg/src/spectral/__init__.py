"""Spectral theory of intersection arrays."""

from src.spectral.constants import epsilon_star, solve_vartheta, vartheta_polynomial
from src.spectral.eigen import (
    biggs_multiplicity,
    closed_form_spectrum,
    eigen_solve,
    feasibility_check,
    intersection_matrix,
    is_feasible,
    local_eigenvalue_bounds,
    standard_sequence,
    theta1_is_b1_minus_one,
)

__all__ = [
    "biggs_multiplicity",
    "closed_form_spectrum",
    "eigen_solve",
    "epsilon_star",
    "feasibility_check",
    "intersection_matrix",
    "is_feasible",
    "local_eigenvalue_bounds",
    "solve_vartheta",
    "standard_sequence",
    "theta1_is_b1_minus_one",
    "vartheta_polynomial",
]
