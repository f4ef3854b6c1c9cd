# python -m tests.test_cylinder
import math

import numpy as np
import pytest

from spectra.cylinder import (
    CALIBRATED_N_THETA,
    CALIBRATED_N_X,
    ConformalPerturbation,
    CylinderGrid,
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
from spectra.errors import DomainError
from spectra.flow import convergence_order


@pytest.fixture(scope="module")
def calibrated():
    return CylinderGrid(1.0, CALIBRATED_N_X, CALIBRATED_N_THETA)


@pytest.fixture(scope="module")
def unperturbed(calibrated):
    return perturbed_ground_eigenvalue(calibrated, default_perturbation(0.0))


def test_grid_geometry(calibrated):
    assert calibrated.dx == pytest.approx(1.0 / 37.0)
    assert calibrated.cell_area == pytest.approx(0.00353785, rel=1e-6)
    assert calibrated.dimension == 36 * 48
    x, theta = calibrated.mesh()
    # θ é o índice externo
    assert x[1] - x[0] == pytest.approx(calibrated.dx)
    assert theta[CALIBRATED_N_X] == pytest.approx(calibrated.dtheta)


def test_grid_validation():
    with pytest.raises(DomainError):
        CylinderGrid(1.0, 2, 48)
    with pytest.raises(DomainError):
        CylinderGrid(-1.0, 36, 48)
    with pytest.raises(DomainError):
        ConformalPerturbation(-1e-3)
    with pytest.raises(DomainError):
        SineCosineProfile(k=-1)


def test_operator_and_weight(calibrated):
    operator = assemble_operator(calibrated)
    assert operator.transpose_defect() == 0.0
    weight = assemble_weight(calibrated, default_perturbation(0.0))
    np.testing.assert_allclose(weight.diagonal, calibrated.cell_area)
    assert assemble_weight(calibrated, default_perturbation(1e-3)).total_mass() == pytest.approx(
        calibrated.dimension * calibrated.cell_area, rel=1e-5)


def test_operator_matches_hand_assembled_stencil():
    grid = CylinderGrid(2.0, 3, 4)
    cx, ct = 1.0 / grid.dx ** 2, 1.0 / grid.dtheta ** 2
    expected = np.zeros((12, 12))
    for j in range(4):
        for i in range(3):
            p = j * 3 + i
            expected[p, p] = 2.0 * cx + 2.0 * ct
            if i > 0:
                expected[p, p - 1] = -cx
            if i < 2:
                expected[p, p + 1] = -cx
            expected[p, ((j + 1) % 4) * 3 + i] = -ct
            expected[p, ((j - 1) % 4) * 3 + i] = -ct
    np.testing.assert_allclose(assemble_operator(grid).to_dense(), expected, rtol=1e-14)


def test_periodic_and_dirichlet_laplacians():
    grid = CylinderGrid(1.0, 5, 8)
    np.testing.assert_allclose(theta_laplacian(grid) @ np.ones(8), 0.0, atol=1e-12)
    # constante não é anulada perto das paredes de Dirichlet
    row_sums = x_laplacian(grid) @ np.ones(5)
    assert row_sums[0] == pytest.approx(1.0 / grid.dx ** 2)
    assert row_sums[-1] == pytest.approx(1.0 / grid.dx ** 2)
    np.testing.assert_allclose(row_sums[1:-1], 0.0, atol=1e-9)


def test_unperturbed_matches_discrete_closed_form(calibrated, unperturbed):
    expected = discrete_eigenvalue_exact(calibrated, 1, 0)
    assert expected == pytest.approx(4.0 * 37 ** 2 * math.sin(math.pi / 74) ** 2, rel=1e-14)
    assert unperturbed.lambda_cont == pytest.approx(expected, rel=1e-9)
    assert unperturbed.lambda_cont == pytest.approx(9.863675, abs=1e-6)
    assert unperturbed.lambda_cont == calibrated.cell_area * unperturbed.iota
    assert unperturbed.residual <= 1e-10 * unperturbed.iota


def test_low_spectrum_multiplicity(calibrated):
    results = perturbed_eigenvalues(calibrated, default_perturbation(0.0), count=3)
    expected = [discrete_eigenvalue_exact(calibrated, 1, 0)] + [discrete_eigenvalue_exact(calibrated, 1, 1)] * 2
    for result, value in zip(results, expected):
        assert result.lambda_cont == pytest.approx(value, rel=1e-9)


def test_exact_cylinder_spectrum():
    assert cylinder_eigenvalue_exact(1.0, 1, 0) == pytest.approx(math.pi ** 2)
    assert cylinder_spectrum(1.0, 3) == pytest.approx([math.pi ** 2, math.pi ** 2 + 1, math.pi ** 2 + 1])
    assert cylinder_spectrum(0.25, 2)[0] == pytest.approx(16 * math.pi ** 2)
    with pytest.raises(DomainError):
        cylinder_eigenvalue_exact(1.0, 0, 0)


def test_second_order_convergence_in_x():
    """Erro de λ_cont contra π² cai com dx² (n_theta pequeno não afeta o modo k = 0)"""
    sizes = (20, 40, 80, 160)
    errors, steps = [], []
    for n_x in sizes:
        grid = CylinderGrid(1.0, n_x, 8)
        result = perturbed_ground_eigenvalue(grid, default_perturbation(0.0))
        errors.append(abs(result.lambda_cont - math.pi ** 2))
        steps.append(grid.dx)
    ratios = [e0 / e1 for e0, e1 in zip(errors, errors[1:])]
    assert all(3.7 < ratio < 4.0 for ratio in ratios)
    assert all(order == pytest.approx(2.0, abs=0.05) for order in convergence_order(steps, errors))


def test_nodal_deficit_first_sweep_row(calibrated):
    assert cylinder_deficit(calibrated, default_perturbation(1e-4)) == pytest.approx(1.623593e-7, rel=1e-5)
    assert cylinder_deficit(calibrated, default_perturbation(0.0)) == 0.0


def test_deficit_quadratic_in_epsilon(calibrated):
    ratio = cylinder_deficit(calibrated, default_perturbation(2e-4)) / cylinder_deficit(
        calibrated, default_perturbation(1e-4))
    assert ratio == pytest.approx(4.0, rel=1e-3)


def test_small_deficit_closed_form():
    pert = default_perturbation(1e-3)
    assert small_deficit_closed_form(1.0, pert) == pytest.approx(1e-6 * (math.pi ** 3 + math.pi) / 2, rel=1e-12)
    assert continuum_deficit(1.0, pert) == pytest.approx(small_deficit_closed_form(1.0, pert), rel=1e-4)


def test_nodal_rule_underestimates_continuum(calibrated):
    pert = default_perturbation(1e-3)
    nodal = cylinder_deficit(calibrated, pert)
    continuum = continuum_deficit(1.0, pert)
    assert nodal < continuum
    assert nodal == pytest.approx(continuum, rel=0.06)


def test_first_order_shift_vanishes_for_angular_profile(calibrated, unperturbed):
    shift = first_order_shift(calibrated, default_perturbation(1e-3), unperturbed=unperturbed)
    assert abs(shift) <= 1e-8


def test_first_order_shift_predicts_radial_profile():
    grid = CylinderGrid(1.0, 24, 8)
    pert = default_perturbation(1e-4, k=0)
    base = perturbed_ground_eigenvalue(grid, default_perturbation(0.0, k=0))
    predicted = first_order_shift(grid, pert, unperturbed=base)
    actual = perturbed_ground_eigenvalue(grid, pert).lambda_cont - base.lambda_cont
    assert predicted < 0
    assert actual == pytest.approx(predicted, rel=1e-2)


def test_perturbation_lowers_ground_eigenvalue(calibrated, unperturbed):
    perturbed = perturbed_ground_eigenvalue(calibrated, default_perturbation(5e-3))
    assert perturbed.lambda_cont < unperturbed.lambda_cont
    assert perturbed.lambda_cont == pytest.approx(9.859992, abs=5e-4)


if __name__ == "__main__":
    pytest.main(["-v", __file__])
