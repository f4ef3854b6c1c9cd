# python -m tests.test_annulus
import math

import numpy as np
import pytest

from spectra.annulus import (
    AnnulusGeometry,
    BesselEigenmode,
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
from spectra.errors import DomainError


def test_geometry_validation():
    with pytest.raises(DomainError):
        AnnulusGeometry(2.0, 1.0)
    with pytest.raises(DomainError):
        AnnulusGeometry(0.0, 1.0)
    with pytest.raises(DomainError):
        AnnulusGeometry(1.0, float("inf"))


def test_closed_forms_first_table_row(annulus_1_5):
    assert capacity_energy(annulus_1_5) == pytest.approx(1.95198, abs=5e-6)
    assert capacity_deficit(annulus_1_5) == pytest.approx(1.16432, abs=5e-6)
    assert math.sqrt(capacity_deficit(annulus_1_5)) == pytest.approx(1.07904, abs=5e-6)
    assert (math.pi / modulus(annulus_1_5)) ** 2 == pytest.approx(150.42198, abs=5e-5)


def test_modulus_is_dual_of_energy():
    for b in (1.01, 2.0, 50.0, 1e4):
        geom = AnnulusGeometry(1.0, b)
        assert modulus(geom) == pytest.approx(1.0 / (2.0 * capacity_energy(geom)), rel=1e-14)


def test_potential_boundary_values(annulus_1_5):
    assert capacity_potential(annulus_1_5, 1.0) == 0.0
    assert capacity_potential(annulus_1_5, 5.0) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(DomainError):
        capacity_potential(annulus_1_5, 0.5)


def test_deficit_by_quadrature_matches_closed_form():
    for b in (1.5, 5.0, 1000.0):
        geom = AnnulusGeometry(1.0, b)
        assert deficit_by_quadrature(geom) == pytest.approx(capacity_deficit(geom), rel=1e-10)


def test_hessian_norm_scaling(annulus_1_5):
    """|Hess u|² decai como r⁻⁴"""
    assert hessian_norm_squared(annulus_1_5, 1.0) / hessian_norm_squared(annulus_1_5, 2.0) == pytest.approx(16.0)


def test_profile_normal_derivatives(annulus_1_5):
    profile = capacity_profile(annulus_1_5)
    log_ratio = math.log(5.0)
    assert profile.normal_derivative_inner == pytest.approx(-1.0 / log_ratio)
    assert profile.normal_derivative_outer == pytest.approx(1.0 / (5.0 * log_ratio))
    assert profile.to_dict()["sqrt_deficit"] == pytest.approx(1.07904, abs=5e-6)


def test_boundary_rate_under_csf_is_minus_deficit():
    for a, b in [(1.0, 5.0), (0.3, 0.31), (2.0, 700.0)]:
        geom = AnnulusGeometry(a, b)
        rate = capacity_boundary_rate(geom, 1.0 / a, -1.0 / b)
        assert rate == pytest.approx(-capacity_deficit(geom), rel=1e-12)


def test_ground_mode_is_radial(annulus_1_5):
    mode = ground_mode(annulus_1_5)
    assert (mode.n, mode.s) == (0, 1)
    assert mode.normalized
    assert mode.eigenvalue == pytest.approx(0.58246, abs=2e-3 * 0.58246)
    assert first_eigenvalue(annulus_1_5) == mode.eigenvalue


def test_spectrum_sorted_and_modes_satisfy_ode(annulus_1_5):
    modes = annulus_spectrum(annulus_1_5, n_max=3, s_max=2)
    values = [m.eigenvalue for m in modes]
    assert values == sorted(values)
    r = np.linspace(1.2, 4.8, 9)
    for mode in modes:
        inner, outer = dirichlet_residuals(mode, annulus_1_5)
        assert max(inner, outer) <= 1e-10
        residual = np.abs(radial_ode_residual(mode, r))
        assert np.all(residual <= 1e-9 * max(1.0, mode.eigenvalue))


def test_normalization_independent_quadrature(annulus_1_5):
    for mode in annulus_spectrum(annulus_1_5, n_max=2, s_max=2):
        assert mode_norm_squared(mode, annulus_1_5) == pytest.approx(1.0, rel=1e-10)


def test_sign_convention_positive_peak(annulus_1_5):
    mode = ground_mode(annulus_1_5)
    r = np.linspace(1.0, 5.0, 2001)
    values = mode.radial(r)
    assert values[np.argmax(np.abs(values))] > 0


def test_thin_annulus_close_to_string():
    geom = AnnulusGeometry(1.0, 1.05)
    assert first_eigenvalue(geom) == pytest.approx((math.pi / 0.05) ** 2, rel=1e-3)


def test_ground_eigenvalue_strictly_decreasing_in_b():
    radii = [5.0, 10.0, 20.0, 50.0, 100.0, 200.0, 500.0, 1000.0, 3000.0, 5000.0]
    values = [first_eigenvalue(AnnulusGeometry(1.0, b)) for b in radii]
    assert all(later < earlier for earlier, later in zip(values, values[1:]))
    # cota inferior pelo disco de raio b (monotonia de domínio)
    for b, value in zip(radii, values):
        assert (2.404825557695773 / b) ** 2 < value


def test_mode_table_counts_multiplicity(annulus_1_5):
    table = mode_table(annulus_1_5, n_max=2, s_max=1)
    assert table[0].index == 1
    for previous, entry in zip(table, table[1:]):
        assert entry.index == previous.index + previous.multiplicity
    assert all(e.multiplicity == (1 if e.n == 0 else 2) for e in table)


def test_mode_value_parity(annulus_1_5):
    mode = annulus_spectrum(annulus_1_5, n_max=1, s_max=1)
    radial = next(m for m in mode if m.n == 0)
    angular = next(m for m in mode if m.n == 1)
    assert mode_value(angular, 2.0, math.pi / 2, parity="cos") == pytest.approx(0.0, abs=1e-15)
    assert mode_value(angular, 2.0, math.pi / 2, parity="sin") == pytest.approx(angular.radial(2.0))
    with pytest.raises(DomainError):
        mode_value(radial, 2.0, 0.0, parity="sin")


def test_rellich_identity(annulus_1_5):
    """∫(x·ν)(∂_ν φ)² = 2λ, com x·ν = -a no círculo interno e +b no externo"""
    for mode in annulus_spectrum(annulus_1_5, n_max=2, s_max=1):
        value = rellich_boundary_integral(mode, annulus_1_5, -1.0, 5.0)
        assert value == pytest.approx(2.0 * mode.eigenvalue, rel=1e-9)


def test_normal_derivative_requires_normalized_mode(annulus_1_5):
    raw = BesselEigenmode(n=0, s=1, k=1.0, coeff_a=1.0, coeff_b=0.0, norm=1.0)
    with pytest.raises(DomainError):
        boundary_normal_derivative(raw, annulus_1_5, "inner")
    with pytest.raises(DomainError):
        boundary_normal_derivative(ground_mode(annulus_1_5), annulus_1_5, "middle")


if __name__ == "__main__":
    pytest.main(["-v", __file__])
