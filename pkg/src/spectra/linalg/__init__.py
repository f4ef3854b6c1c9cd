# src/spectra/linalg/__init__.py
"""
Álgebra linear simétrica (armazenamento, solves SPD e autopares).

Classes:
    SymmetricSparseMatrix: Matriz esparsa simétrica (CSR)
    DiagonalWeightMatrix: Matriz de massa diagonal positiva
    EigenPair: Autopar com resíduo
"""

from .core import (
    DEFAULT_SEED,
    DEFAULT_TOL,
    DiagonalWeightMatrix,
    EigenPair,
    SymmetricSparseMatrix,
    generalized_smallest_eigenpairs,
    gershgorin_shift,
    is_positive_definite,
    rayleigh_quotient,
    smallest_eigenpairs,
    solve_spd,
    symmetric_reduce,
)

__all__ = [
    'DEFAULT_SEED', 'DEFAULT_TOL', 'DiagonalWeightMatrix', 'EigenPair', 'SymmetricSparseMatrix',
    'generalized_smallest_eigenpairs', 'gershgorin_shift', 'is_positive_definite', 'rayleigh_quotient', 'smallest_eigenpairs', 'solve_spd',
    'symmetric_reduce',
]
