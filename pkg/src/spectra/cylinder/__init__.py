# src/spectra/cylinder/__init__.py
"""
Cilindro plano com perturbação conforme: montagem por diferenças finitas,
autovalores generalizados e quadratura do déficit.
"""

from .fd import (
    CALIBRATED_N_THETA,
    CALIBRATED_N_X,
    ConformalPerturbation,
    CylinderGrid,
    FdEigenResult,
    SineCosineProfile,
    assemble_operator,
    assemble_weight,
    continuum_deficit,
    cylinder_deficit,
    cylinder_eigenvalue_exact,
    cylinder_spectrum,
    default_perturbation,
    discrete_eigenvalue_exact,
    first_order_shift,
    perturbed_eigenvalues,
    perturbed_ground_eigenvalue,
    small_deficit_closed_form,
    theta_laplacian,
    x_laplacian,
)

__all__ = [
    'CALIBRATED_N_THETA', 'CALIBRATED_N_X', 'ConformalPerturbation', 'CylinderGrid', 'FdEigenResult',
    'SineCosineProfile', 'assemble_operator', 'assemble_weight', 'continuum_deficit', 'cylinder_deficit',
    'cylinder_eigenvalue_exact', 'cylinder_spectrum', 'default_perturbation', 'discrete_eigenvalue_exact',
    'first_order_shift', 'perturbed_eigenvalues', 'perturbed_ground_eigenvalue', 'small_deficit_closed_form',
    'theta_laplacian', 'x_laplacian',
]
