# src/spectra/flow/__init__.py
"""
CSF de anéis concêntricos e verificação das identidades variacionais.
"""

from .verify import (
    CSF,
    DEFAULT_EPSILON0,
    DEFAULT_FD_STEP,
    HADAMARD_BAND,
    TOPPING_BAND,
    BoundaryMotion,
    convergence_order,
    csf_radius,
    csf_ricci_eigenvalue_rate,
    evolve_csf,
    gap_report,
    verify_energy_variation,
    verify_hadamard,
    verify_modulus_rate,
    verify_topping,
)

__all__ = [
    'CSF', 'DEFAULT_EPSILON0', 'DEFAULT_FD_STEP', 'HADAMARD_BAND', 'TOPPING_BAND', 'BoundaryMotion',
    'convergence_order', 'csf_radius', 'csf_ricci_eigenvalue_rate', 'evolve_csf', 'gap_report',
    'verify_energy_variation', 'verify_hadamard', 'verify_modulus_rate', 'verify_topping',
]
