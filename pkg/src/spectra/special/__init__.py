# src/spectra/special/__init__.py
"""
Funções de Bessel de ordem inteira e raízes do produto cruzado F_n.
"""

from .bessel import (
    MAX_ORDER,
    MIN_Y_ARGUMENT,
    CrossProductRoot,
    bessel_j,
    bessel_j_prime,
    bessel_order,
    bessel_y,
    bessel_y_prime,
    bisect_root,
    bracket_cross_product_roots,
    cross_product,
    cross_product_roots,
    wronskian_defect,
)

__all__ = [
    'MAX_ORDER', 'MIN_Y_ARGUMENT', 'CrossProductRoot', 'bessel_j', 'bessel_j_prime', 'bessel_order',
    'bessel_y', 'bessel_y_prime', 'bisect_root', 'bracket_cross_product_roots', 'cross_product',
    'cross_product_roots', 'wronskian_defect',
]
