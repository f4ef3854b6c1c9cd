# python -m tests.test_bessel
import math

import numpy as np
import pytest
from scipy import integrate, optimize, special

from spectra.errors import BracketError, DomainError
from spectra.special import (
    MAX_ORDER,
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


def series_j(n: int, x: float, terms: int = 40) -> float:
    """J_n pela série de potências (oráculo independente da scipy)."""
    return sum((-1) ** m * (x / 2.0) ** (2 * m + n) / (math.factorial(m) * math.factorial(m + n))
               for m in range(terms))


@pytest.mark.parametrize("n", [0, 1, 2, 5])
@pytest.mark.parametrize("x", [0.1, 1.0, 3.5, 7.0])
def test_bessel_j_against_series(n, x):
    assert bessel_j(n, x) == pytest.approx(series_j(n, x), rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("n", [0, 1, 3])
@pytest.mark.parametrize("x", [1.0, 3.5, 7.0])
def test_integral_representations(n, x):
    """Representações integrais de Bessel avaliadas com quad."""
    j_int, _ = integrate.quad(lambda t: math.cos(n * t - x * math.sin(t)), 0.0, math.pi, epsabs=1e-13)
    assert bessel_j(n, x) == pytest.approx(j_int / math.pi, abs=1e-10)

    first, _ = integrate.quad(lambda t: math.sin(x * math.sin(t) - n * t), 0.0, math.pi, epsabs=1e-13)
    tail, _ = integrate.quad(lambda t: (math.exp(n * t) + (-1) ** n * math.exp(-n * t)) * math.exp(-x * math.sinh(t)),
                             0.0, 20.0, epsabs=1e-13, limit=200)
    assert bessel_y(n, x) == pytest.approx((first - tail) / math.pi, abs=1e-9)


def test_bessel_j_prime_recurrence():
    """J_n' = (J_{n-1} - J_{n+1})/2"""
    x = np.linspace(0.5, 20.0, 40)
    for n in (1, 3, 7):
        expected = 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x))
        np.testing.assert_allclose(bessel_j_prime(n, x), expected, rtol=0, atol=1e-14)


def test_wronskian_identity():
    x = np.geomspace(1e-2, 50.0, 60)
    for n in (0, 1, 4, 10):
        defect = np.abs(wronskian_defect(n, x))
        assert np.all(defect <= 1e-10 * 2.0 / (np.pi * x))


def test_scalar_in_scalar_out():
    assert isinstance(bessel_j(0, 1.0), float)
    assert isinstance(bessel_y(1, 2.0), float)
    assert bessel_j(0, np.array([1.0, 2.0])).shape == (2,)


@pytest.mark.parametrize("order", [-1, 1.5, MAX_ORDER + 1, True])
def test_invalid_order(order):
    with pytest.raises(DomainError):
        bessel_order(order)


def test_y_argument_lower_bound():
    with pytest.raises(DomainError):
        bessel_y(0, 1e-7)
    assert math.isfinite(bessel_y(0, 1e-6 + 1e-15))
    assert math.isfinite(bessel_y(5, 1e-6))


def test_y_prime_matches_recurrence():
    x = np.linspace(0.5, 20.0, 40)
    np.testing.assert_allclose(bessel_y_prime(0, x), -bessel_y(1, x), rtol=0, atol=1e-12)
    for n in (1, 3, 7):
        expected = 0.5 * (bessel_y(n - 1, x) - bessel_y(n + 1, x))
        np.testing.assert_allclose(bessel_y_prime(n, x), expected, rtol=1e-10, atol=1e-12)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_three_term_recurrence_both_kinds(n):
    """C_{n-1} + C_{n+1} = (2n/x) C_n"""
    x = np.array([0.5, 1.0, 2.0, 5.0, 10.0, 50.0])
    for func in (bessel_j, bessel_y):
        left = func(n - 1, x) + func(n + 1, x)
        right = 2.0 * n / x * func(n, x)
        np.testing.assert_allclose(left, right, rtol=1e-10, atol=1e-10)


def test_j_values_near_zero_and_at_j1_zero():
    assert bessel_j(0, 1e-300) == pytest.approx(1.0, abs=1e-15)
    assert abs(bessel_j_prime(0, 3.8317059702075123)) <= 1e-10
    assert bessel_j_prime(0, 1.0) == pytest.approx(-0.4400505857449335, abs=1e-12)
    fd = (bessel_j(0, 2.0 + 1e-6) - bessel_j(0, 2.0 - 1e-6)) / 2e-6
    assert bessel_j_prime(0, 2.0) == pytest.approx(fd, abs=1e-8)


def test_cross_product_antisymmetric_when_unordered():
    k = 1.7
    forward = cross_product(2, k, 1.0, 3.0)
    backward = cross_product(2, k, 3.0, 1.0, ordered=False)
    assert backward == pytest.approx(-forward, rel=1e-14)
    with pytest.raises(DomainError):
        cross_product(2, k, 3.0, 1.0)


def test_roots_increasing_and_certified():
    roots = bracket_cross_product_roots(0, 1.0, 2.0, 4)
    ks = [r.k for r in roots]
    assert all(k1 > k0 for k0, k1 in zip(ks, ks[1:]))
    for root in roots:
        assert root.width <= 1e-13 or root.residual == 0.0
        assert root.lower <= root.k <= root.upper
        assert abs(cross_product(0, root.k, 1.0, 2.0)) <= 1e-12


def test_thin_annulus_roots_near_string_values():
    """Anel fino: k_{0,s} ≈ sπ/(b - a)"""
    a, b = 10.0, 10.5
    for s, k in enumerate(cross_product_roots(0, a, b, 3), start=1):
        assert k == pytest.approx(s * math.pi / (b - a), rel=1e-3)


@pytest.mark.parametrize("n,a,b", [(0, 1.0, 5.0), (1, 1.0, 5.0), (3, 1.0, 20.0), (0, 1.0, 1000.0)])
def test_roots_agree_with_bisection_oracle(n, a, b):
    step = min(math.pi / (b - a), 0.1) / 4.0
    for k in cross_product_roots(n, a, b, 2):
        oracle = bisect_root(n, a, b, max(k - step, 1e-3 / a), k + step)
        assert abs(k * k - oracle * oracle) <= 1e-10 * max(1.0, oracle * oracle)


def dense_first_root(n: int, a: float, b: float, k_max: float, samples: int = 200001) -> float:
    """Primeira raiz de F_n por amostragem densa a partir de k = 1e-6 e brentq."""
    ks = np.linspace(1e-6, k_max, samples)
    values = special.jv(n, ks * a) * special.yv(n, ks * b) - special.jv(n, ks * b) * special.yv(n, ks * a)
    first = int(np.flatnonzero(values[:-1] * values[1:] < 0)[0])
    return optimize.brentq(lambda k: float(cross_product(n, k, a, b)), ks[first], ks[first + 1], xtol=1e-300)


@pytest.mark.parametrize("b,expected", [(1000.0, 0.0026548), (3000.0, 0.0008724), (5000.0, 0.0005207)])
def test_wide_annulus_first_root(b, expected):
    k = cross_product_roots(0, 1.0, b, 1)[0]
    assert k == pytest.approx(dense_first_root(0, 1.0, b, 5.0 / b), rel=1e-10)
    assert k == pytest.approx(expected, abs=5e-7)
    assert k > 2.404825557695773 / b


def test_annulus_beyond_y_domain_rejected():
    with pytest.raises(DomainError):
        cross_product_roots(0, 1.0, 1e7, 1)


def test_bisect_requires_sign_change():
    with pytest.raises(BracketError):
        bisect_root(0, 1.0, 2.0, 0.5, 0.6)


def test_bracket_error_when_scan_too_short():
    with pytest.raises(BracketError) as info:
        bracket_cross_product_roots(0, 1.0, 2.0, 5, k_limit=4.0)
    assert info.value.scan_range[1] == 4.0


if __name__ == "__main__":
    pytest.main(["-v", __file__])
