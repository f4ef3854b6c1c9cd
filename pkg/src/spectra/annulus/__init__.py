# src/spectra/annulus/__init__.py
"""
Anel concêntrico: capacidade (u, E, h, D) e espectro de Dirichlet exato.

Classes:
    AnnulusGeometry: Raios 0 < a < b
    CapacityProfile: E, h, D e derivadas normais de u
    BesselEigenmode: Modo R_n(r)·cos(nθ) normalizado
"""

from .model import (
    DEFAULT_N_MAX,
    DEFAULT_S_MAX,
    AnnulusGeometry,
    BesselEigenmode,
    CapacityProfile,
    ModeTableEntry,
    annulus_spectrum,
    boundary_normal_derivative,
    capacity_boundary_rate,
    capacity_deficit,
    capacity_energy,
    capacity_potential,
    capacity_profile,
    deficit_by_quadrature,
    dirichlet_residuals,
    first_eigenvalue,
    ground_mode,
    hessian_norm_squared,
    mode_norm_squared,
    mode_table,
    mode_value,
    modulus,
    radial_ode_residual,
    rellich_boundary_integral,
)

__all__ = [
    'DEFAULT_N_MAX', 'DEFAULT_S_MAX', 'AnnulusGeometry', 'BesselEigenmode', 'CapacityProfile',
    'ModeTableEntry', 'annulus_spectrum', 'boundary_normal_derivative', 'capacity_boundary_rate',
    'capacity_deficit', 'capacity_energy', 'capacity_potential', 'capacity_profile',
    'deficit_by_quadrature', 'dirichlet_residuals', 'first_eigenvalue', 'ground_mode',
    'hessian_norm_squared', 'mode_norm_squared', 'mode_table', 'mode_value', 'modulus',
    'radial_ode_residual', 'rellich_boundary_integral',
]
