# src/spectra/annulus/model.py
"""
Anel concêntrico euclidiano {a < |z| < b}: potencial de capacidade, energia,
módulo, déficit de Hessiana e o espectro de Dirichlet exato via raízes do
produto cruzado de Bessel.

Convenção de normal: ν é a normal exterior do anel, apontando para r < a no
círculo interno e para r > b no externo. Todos os sinais de integrais de
fronteira seguem dessa convenção única.
"""

import logging
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import List, Tuple, Union

import numpy as np
from scipy import integrate, special

from spectra.errors import DomainError
from spectra.special import (
    bessel_j,
    bessel_j_prime,
    bessel_order,
    bessel_y,
    bessel_y_prime,
    bracket_cross_product_roots,
)

logger = logging.getLogger("AnnulusModel")

DEFAULT_N_MAX = 5
DEFAULT_S_MAX = 2
NORMALIZATION_RTOL = 1e-12
DIRICHLET_TOLERANCE = 1e-10

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class AnnulusGeometry:
    """
    Anel concêntrico de raios 0 < a < b.

    Attributes:
        a: Raio interno
        b: Raio externo
    """
    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError(f"Raios devem ser finitos, recebido a={self.a}, b={self.b}")
        if not 0.0 < a < b:
            raise DomainError(f"Exige-se 0 < a < b, recebido a={a}, b={b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def log_ratio(self) -> float:
        """ln(b/a)."""
        return math.log(self.b / self.a)

    @property
    def area(self) -> float:
        return math.pi * (self.b ** 2 - self.a ** 2)

    def contains(self, r: ArrayLike) -> bool:
        arr = np.asarray(r, dtype=float)
        return bool(np.all((arr >= self.a) & (arr <= self.b)))


@dataclass(frozen=True)
class CapacityProfile:
    """
    Grandezas de capacidade do anel.

    Attributes:
        energy: E = ½∫|∇u|²
        modulus: h = ln(b/a)/(2π) = 1/(2E)
        deficit: D = ½∫|Hess u|²
        normal_derivative_inner: ∂_ν u em r = a (ν exterior ao anel)
        normal_derivative_outer: ∂_ν u em r = b
    """
    energy: float
    modulus: float
    deficit: float
    normal_derivative_inner: float
    normal_derivative_outer: float

    def __post_init__(self):
        if not (self.energy > 0 and self.modulus > 0 and self.deficit > 0):
            raise DomainError(f"Perfil de capacidade inválido: {self}")
        if not math.isclose(self.modulus, 1.0 / (2.0 * self.energy), rel_tol=1e-14):
            raise DomainError(f"h = {self.modulus} difere de 1/(2E) = {1.0 / (2.0 * self.energy)}")

    @property
    def sqrt_deficit(self) -> float:
        return math.sqrt(self.deficit)

    def to_dict(self) -> dict:
        return {
            "energy": self.energy,
            "modulus": self.modulus,
            "deficit": self.deficit,
            "sqrt_deficit": self.sqrt_deficit,
            "normal_derivative_inner": self.normal_derivative_inner,
            "normal_derivative_outer": self.normal_derivative_outer,
        }


# -- capacidade ----------------------------------------------------------------

def capacity_potential(geom: AnnulusGeometry, r: ArrayLike) -> ArrayLike:
    """
    Potencial de capacidade u(r) = (ln r - ln a)/ln(b/a), com u(a) = 0 e u(b) = 1.

    Raises:
        DomainError: r fora de [a, b]
    """
    if not geom.contains(r):
        raise DomainError(f"r fora de [{geom.a}, {geom.b}]: {r}")
    value = (np.log(np.asarray(r, dtype=float)) - math.log(geom.a)) / geom.log_ratio
    return float(value) if np.ndim(r) == 0 else value


def capacity_energy(geom: AnnulusGeometry) -> float:
    """E = π/ln(b/a)."""
    return math.pi / geom.log_ratio


def capacity_deficit(geom: AnnulusGeometry) -> float:
    """D = π/ln²(b/a)·(1/a² - 1/b²)."""
    return math.pi / geom.log_ratio ** 2 * (1.0 / geom.a ** 2 - 1.0 / geom.b ** 2)


def modulus(geom: AnnulusGeometry) -> float:
    """h = ln(b/a)/(2π), igual a 1/(2E)."""
    h = geom.log_ratio / (2.0 * math.pi)
    dual = 1.0 / (2.0 * capacity_energy(geom))
    if not math.isclose(h, dual, rel_tol=1e-14):
        logger.warning(f"Módulo inconsistente para {geom}: {h} vs 1/(2E) = {dual}")
    return h


def hessian_norm_squared(geom: AnnulusGeometry, r: ArrayLike) -> ArrayLike:
    """|Hess u|² = 2/(r⁴ ln²(b/a)) (norma de Frobenius)."""
    if not geom.contains(r):
        raise DomainError(f"r fora de [{geom.a}, {geom.b}]: {r}")
    return 2.0 / (np.asarray(r, dtype=float) ** 4 * geom.log_ratio ** 2)


def deficit_by_quadrature(geom: AnnulusGeometry) -> float:
    """½∫|Hess u|² dA por quadratura adaptativa radial."""
    value, _ = integrate.quad(lambda r: 0.5 * hessian_norm_squared(geom, r) * 2.0 * math.pi * r,
                              geom.a, geom.b, epsabs=0.0, epsrel=1e-13, limit=200)
    return value


def capacity_profile(geom: AnnulusGeometry) -> CapacityProfile:
    """Reúne E, h, D e as derivadas normais de u nas duas fronteiras."""
    log_ratio = geom.log_ratio
    return CapacityProfile(
        energy=capacity_energy(geom),
        modulus=modulus(geom),
        deficit=capacity_deficit(geom),
        normal_derivative_inner=-1.0 / (geom.a * log_ratio),
        normal_derivative_outer=1.0 / (geom.b * log_ratio),
    )


def capacity_boundary_rate(geom: AnnulusGeometry, velocity_inner: float, velocity_outer: float) -> float:
    """
    Variação de E sob movimento de fronteira com velocidades normais dadas:
    dE/dt = -½∫_{∂A} V (∂_ν u)² dσ.

    Com as velocidades de CSF (V = 1/a, V = -1/b) o valor é exatamente -D.
    """
    profile = capacity_profile(geom)
    inner = 2.0 * math.pi * geom.a * velocity_inner * profile.normal_derivative_inner ** 2
    outer = 2.0 * math.pi * geom.b * velocity_outer * profile.normal_derivative_outer ** 2
    return -0.5 * (inner + outer)


# -- espectro ------------------------------------------------------------------

@dataclass(frozen=True)
class BesselEigenmode:
    """
    Modo de Dirichlet do anel: φ = R_n(r)·cos(nθ), R_n = A·J_n(kr) + B·Y_n(kr).

    Attributes:
        n: Índice angular
        s: Ramo radial (>= 1)
        k: Número de onda; o autovalor é k²
        coeff_a: Coeficiente de J_n
        coeff_b: Coeficiente de Y_n
        norm: Norma L² do perfil antes da normalização
        normalized: Se os coeficientes já dão ∫φ² = 1
    """
    n: int
    s: int
    k: float
    coeff_a: float
    coeff_b: float
    norm: float
    normalized: bool = False

    @property
    def eigenvalue(self) -> float:
        return self.k * self.k

    @property
    def angular_measure(self) -> float:
        """∫cos²(nθ)dθ: 2π para n = 0, π para n >= 1."""
        return 2.0 * math.pi if self.n == 0 else math.pi

    @property
    def multiplicity(self) -> int:
        return 1 if self.n == 0 else 2

    def radial(self, r: ArrayLike) -> ArrayLike:
        kr = self.k * np.asarray(r, dtype=float)
        return self.coeff_a * bessel_j(self.n, kr) + self.coeff_b * bessel_y(self.n, kr)

    def radial_prime(self, r: ArrayLike) -> ArrayLike:
        kr = self.k * np.asarray(r, dtype=float)
        return self.k * (self.coeff_a * bessel_j_prime(self.n, kr) + self.coeff_b * bessel_y_prime(self.n, kr))

    def radial_second(self, r: ArrayLike) -> ArrayLike:
        kr = self.k * np.asarray(r, dtype=float)
        value = self.k ** 2 * (self.coeff_a * special.jvp(self.n, kr, 2) + self.coeff_b * special.yvp(self.n, kr, 2))
        return float(value) if np.ndim(r) == 0 else value

    def label(self) -> str:
        return f"(n={self.n}, s={self.s})"


def _build_mode(geom: AnnulusGeometry, n: int, s: int, k: float) -> BesselEigenmode:
    # R(r) = Y_n(ka) J_n(kr) - J_n(ka) Y_n(kr) anula em r = a; em r = b vale -F_n(k)
    coeff_a = bessel_y(n, k * geom.a)
    coeff_b = -bessel_j(n, k * geom.a)
    scale = max(abs(coeff_a), abs(coeff_b))
    raw = BesselEigenmode(n=n, s=s, k=k, coeff_a=coeff_a / scale, coeff_b=coeff_b / scale, norm=1.0)

    norm_squared, _ = integrate.quad(lambda r: raw.radial(r) ** 2 * r, geom.a, geom.b,
                                     epsabs=0.0, epsrel=NORMALIZATION_RTOL, limit=400)
    norm = math.sqrt(raw.angular_measure * norm_squared)

    samples = np.linspace(geom.a, geom.b, 2001)
    values = raw.radial(samples)
    sign = -1.0 if values[int(np.argmax(np.abs(values)))] < 0 else 1.0

    return replace(raw, coeff_a=sign * raw.coeff_a / norm, coeff_b=sign * raw.coeff_b / norm,
                   norm=norm, normalized=True)


@lru_cache(maxsize=256)
def _spectrum_cached(geom: AnnulusGeometry, n_max: int, s_max: int) -> Tuple[BesselEigenmode, ...]:
    modes = []
    for n in range(n_max + 1):
        for s, root in enumerate(bracket_cross_product_roots(n, geom.a, geom.b, s_max), start=1):
            modes.append(_build_mode(geom, n, s, root.k))
    modes.sort(key=lambda m: (m.eigenvalue, m.n, m.s))
    return tuple(modes)


def annulus_spectrum(geom: AnnulusGeometry, n_max: int = DEFAULT_N_MAX,
                     s_max: int = DEFAULT_S_MAX) -> List[BesselEigenmode]:
    """
    Todos os modos normalizados com n <= n_max e s <= s_max, em ordem crescente
    de autovalor.

    Args:
        geom: Geometria do anel
        n_max: Maior índice angular
        s_max: Ramos radiais por índice angular

    Returns:
        List[BesselEigenmode]: Modos ordenados; o primeiro é o mínimo global
            do conjunto calculado

    Raises:
        BracketError: Falha de isolamento de raízes (com o modo na mensagem)
    """
    bessel_order(n_max)
    if n_max < 0 or s_max < 1:
        raise DomainError(f"Exige-se n_max >= 0 e s_max >= 1, recebido ({n_max}, {s_max})")
    modes = list(_spectrum_cached(geom, int(n_max), int(s_max)))
    logger.debug(f"Espectro de {geom}: λ₁ = {modes[0].eigenvalue:.10g} no modo {modes[0].label()}")
    return modes


def ground_mode(geom: AnnulusGeometry, n_max: int = DEFAULT_N_MAX, s_max: int = DEFAULT_S_MAX) -> BesselEigenmode:
    """Modo fundamental, certificado como mínimo sobre todos os candidatos calculados."""
    mode = annulus_spectrum(geom, n_max, s_max)[0]
    if (mode.n, mode.s) != (0, 1):
        logger.warning(f"Modo fundamental de {geom} não é (0, 1): {mode.label()}")
    return mode


def first_eigenvalue(geom: AnnulusGeometry) -> float:
    return ground_mode(geom).eigenvalue


@dataclass(frozen=True)
class ModeTableEntry:
    """Linha da tabela do espectro baixo (autovalor com multiplicidade)."""
    index: int
    eigenvalue: float
    n: int
    s: int
    multiplicity: int


def mode_table(geom: AnnulusGeometry, n_max: int = DEFAULT_N_MAX,
               s_max: int = DEFAULT_S_MAX) -> List[ModeTableEntry]:
    """
    Espectro baixo com multiplicidade: modos n >= 1 contam duas vezes
    (cos nθ e sen nθ). `index` é a posição do primeiro autovalor do grupo
    na lista contada com multiplicidade (começando em 1).
    """
    entries = []
    position = 1
    for mode in annulus_spectrum(geom, n_max, s_max):
        entries.append(ModeTableEntry(index=position, eigenvalue=mode.eigenvalue, n=mode.n, s=mode.s,
                                      multiplicity=mode.multiplicity))
        position += mode.multiplicity
    return entries


def mode_value(mode: BesselEigenmode, r: ArrayLike, theta: ArrayLike, parity: str = "cos") -> ArrayLike:
    """φ(r, θ) = R_n(r)·cos(nθ) (ou sen(nθ) com parity="sin")."""
    if parity not in ("cos", "sin"):
        raise DomainError(f"parity deve ser 'cos' ou 'sin', recebido {parity!r}")
    if parity == "sin" and mode.n == 0:
        raise DomainError("Modo n = 0 não tem parceiro seno")
    angular = np.cos(mode.n * np.asarray(theta)) if parity == "cos" else np.sin(mode.n * np.asarray(theta))
    return mode.radial(r) * angular


def mode_norm_squared(mode: BesselEigenmode, geom: AnnulusGeometry, panels: int = 64, order: int = 16) -> float:
    """
    ∫φ² dA por Gauss-Legendre composto em painéis geometricamente espaçados
    (independente da quadratura adaptativa usada na normalização).
    """
    nodes, weights = np.polynomial.legendre.leggauss(order)
    edges = geom.a * (geom.b / geom.a) ** (np.arange(panels + 1) / panels)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        r = 0.5 * (hi - lo) * nodes + 0.5 * (hi + lo)
        total += 0.5 * (hi - lo) * float(np.sum(weights * mode.radial(r) ** 2 * r))
    return mode.angular_measure * total


def radial_ode_residual(mode: BesselEigenmode, r: ArrayLike) -> ArrayLike:
    """R″ + R′/r + (k² - n²/r²)R, que deve anular em todo r."""
    r = np.asarray(r, dtype=float)
    return (mode.radial_second(r) + mode.radial_prime(r) / r
            + (mode.k ** 2 - mode.n ** 2 / r ** 2) * mode.radial(r))


def dirichlet_residuals(mode: BesselEigenmode, geom: AnnulusGeometry) -> Tuple[float, float]:
    return abs(mode.radial(geom.a)), abs(mode.radial(geom.b))


# -- fronteira -----------------------------------------------------------------

def boundary_normal_derivative(mode: BesselEigenmode, geom: AnnulusGeometry, which: str) -> float:
    """
    Amplitude radial de ∂_ν φ no círculo pedido, com ν exterior ao anel:
    -R′(a) no círculo interno e +R′(b) no externo.

    Args:
        mode: Modo normalizado
        geom: Geometria do anel
        which: "inner" ou "outer"

    Raises:
        DomainError: Modo não normalizado ou `which` inválido
    """
    if not mode.normalized:
        raise DomainError(f"Modo {mode.label()} não está normalizado")
    if which == "inner":
        return -mode.radial_prime(geom.a)
    if which == "outer":
        return mode.radial_prime(geom.b)
    raise DomainError(f"which deve ser 'inner' ou 'outer', recebido {which!r}")


def rellich_boundary_integral(mode: BesselEigenmode, geom: AnnulusGeometry,
                              weight_inner: float, weight_outer: float) -> float:
    """
    ∫_{∂A} 𝒱 (∂_ν φ)² dσ com 𝒱 constante em cada círculo.

    Para n = 0 vale 2πa·w_in·(∂_ν φ|_a)² + 2πb·w_out·(∂_ν φ|_b)²; para n >= 1 o
    fator angular é π (membro cos nθ).
    """
    inner = boundary_normal_derivative(mode, geom, "inner")
    outer = boundary_normal_derivative(mode, geom, "outer")
    return mode.angular_measure * (geom.a * weight_inner * inner ** 2 + geom.b * weight_outer * outer ** 2)
