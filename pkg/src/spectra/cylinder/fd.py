# src/spectra/cylinder/fd.py
"""
Diferenças finitas no cilindro plano [0, h] x S¹ com métrica conforme
g_ε = e^{2εf₀}(dx² + dθ²).

O problema -Δ_flat φ = λ e^{2εf₀} φ vira o problema generalizado A x = ι B x com

    A = I_θ ⊗ L_x + L_θ ⊗ I_x,    B_ii = e^{2εf₀(x_i, θ_i)}·dx·dθ,

indexado com θ como índice externo (posição j·n_x + i). O autovalor comparável
ao contínuo é λ_cont = dx·dθ·ι.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import scipy.sparse as sp
from scipy import integrate

from spectra.errors import DomainError
from spectra.linalg import (
    DEFAULT_SEED,
    DEFAULT_TOL,
    DiagonalWeightMatrix,
    SymmetricSparseMatrix,
    generalized_smallest_eigenpairs,
)

logger = logging.getLogger("CylinderFD")

CALIBRATED_N_X = 36
CALIBRATED_N_THETA = 48


@dataclass(frozen=True)
class CylinderGrid:
    """
    Grade do cilindro: Dirichlet em x = 0, h e periódica em θ.

    Attributes:
        h: Altura do cilindro
        n_x: Pontos interiores em x (x_i = i·dx, i = 1..n_x)
        n_theta: Pontos em θ (θ_j = j·dθ, j = 0..n_theta-1)
    """
    h: float
    n_x: int
    n_theta: int

    def __post_init__(self):
        if not (math.isfinite(self.h) and self.h > 0):
            raise DomainError(f"Altura do cilindro deve ser positiva, recebido {self.h}")
        if self.n_x < 3 or self.n_theta < 4:
            raise DomainError(f"Grade pequena demais: n_x={self.n_x} (mín. 3), n_theta={self.n_theta} (mín. 4)")

    @property
    def dx(self) -> float:
        return self.h / (self.n_x + 1)

    @property
    def dtheta(self) -> float:
        return 2.0 * math.pi / self.n_theta

    @property
    def cell_area(self) -> float:
        return self.dx * self.dtheta

    @property
    def dimension(self) -> int:
        return self.n_x * self.n_theta

    def x_nodes(self) -> np.ndarray:
        return self.dx * np.arange(1, self.n_x + 1)

    def theta_nodes(self) -> np.ndarray:
        return self.dtheta * np.arange(self.n_theta)

    def mesh(self) -> Tuple[np.ndarray, np.ndarray]:
        """Coordenadas (x, θ) achatadas com θ externo."""
        theta, x = np.meshgrid(self.theta_nodes(), self.x_nodes(), indexing="ij")
        return x.ravel(), theta.ravel()

    def to_dict(self) -> dict:
        return {"h": self.h, "n_x": self.n_x, "n_theta": self.n_theta,
                "dx": self.dx, "dtheta": self.dtheta, "cell_area": self.cell_area}


@dataclass(frozen=True)
class SineCosineProfile:
    """
    Perfil f₀(x, θ) = sen(πx/h)·cos(kθ); com k = 0 o perfil não depende de θ.

    Attributes:
        h: Altura do cilindro
        k: Frequência angular (inteiro >= 0)
    """
    h: float = 1.0
    k: int = 1

    def __post_init__(self):
        if not self.h > 0:
            raise DomainError(f"Altura deve ser positiva, recebido {self.h}")
        if self.k < 0 or int(self.k) != self.k:
            raise DomainError(f"Frequência angular deve ser inteiro >= 0, recebido {self.k}")

    def value(self, x, theta):
        return np.sin(math.pi * np.asarray(x) / self.h) * np.cos(self.k * np.asarray(theta))

    def gradient(self, x, theta):
        """(∂_x f₀, ∂_θ f₀) analíticos."""
        x, theta = np.asarray(x), np.asarray(theta)
        wave = math.pi / self.h
        d_x = wave * np.cos(wave * x) * np.cos(self.k * theta)
        d_theta = -self.k * np.sin(wave * x) * np.sin(self.k * theta)
        return d_x, d_theta

    def gradient_energy(self) -> float:
        """∫|∇f₀|² dx dθ sobre [0, h] x [0, 2π]."""
        wave = math.pi / self.h
        if self.k == 0:
            return wave ** 2 * self.h * math.pi
        return 0.5 * math.pi * self.h * (wave ** 2 + self.k ** 2)

    def describe(self) -> str:
        return f"sin(pi*x/{self.h:g})*cos({self.k}*theta)" if self.k else f"sin(pi*x/{self.h:g})"


@dataclass(frozen=True)
class ConformalPerturbation:
    """
    Perturbação conforme g_ε = e^{2εf₀}(dx² + dθ²).

    Attributes:
        epsilon: Amplitude (>= 0)
        profile: Perfil f₀ com gradiente analítico
    """
    epsilon: float
    profile: SineCosineProfile = field(default_factory=SineCosineProfile)

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and self.epsilon >= 0):
            raise DomainError(f"epsilon deve ser finito e >= 0, recebido {self.epsilon}")

    def conformal_factor(self, x, theta):
        return np.exp(2.0 * self.epsilon * self.profile.value(x, theta))

    def deficit_density(self, x, theta):
        """e^{-2εf₀}|ε∇f₀|² (antes da divisão por h²)."""
        d_x, d_theta = self.profile.gradient(x, theta)
        return np.exp(-2.0 * self.epsilon * self.profile.value(x, theta)) * self.epsilon ** 2 * (d_x ** 2 + d_theta ** 2)


def default_perturbation(epsilon: float, h: float = 1.0, k: int = 1) -> ConformalPerturbation:
    return ConformalPerturbation(epsilon=epsilon, profile=SineCosineProfile(h=h, k=k))


@dataclass(frozen=True, eq=False)
class FdEigenResult:
    """
    Autovalor discreto e sua conversão pela área de célula.

    Attributes:
        iota: Autovalor bruto de A x = ι B x
        lambda_cont: dx·dθ·ι
        residual: ‖A x - ι B x‖/‖x‖
        grid: Grade usada
        vector: Autovetor com xᵀ B x = 1
    """
    iota: float
    lambda_cont: float
    residual: float
    grid: CylinderGrid
    vector: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        if self.lambda_cont != self.grid.cell_area * self.iota:
            raise DomainError("lambda_cont deve ser exatamente cell_area·iota")

    def to_dict(self) -> dict:
        return {"iota": self.iota, "lambda_cont": self.lambda_cont, "residual": self.residual, **self.grid.to_dict()}


# -- montagem ------------------------------------------------------------------

def x_laplacian(grid: CylinderGrid) -> sp.csr_matrix:
    """L_x = tridiag(-1, 2, -1)/dx² com truncamento de Dirichlet."""
    n = grid.n_x
    off = -np.ones(n - 1)
    return sp.diags([off, 2.0 * np.ones(n), off], [-1, 0, 1], format="csr") / grid.dx ** 2


def theta_laplacian(grid: CylinderGrid) -> sp.csr_matrix:
    """L_θ = circulante(-1, 2, -1)/dθ²."""
    n = grid.n_theta
    off = -np.ones(n - 1)
    corner = -np.ones(1)
    return sp.diags([corner, off, 2.0 * np.ones(n), off, corner], [-(n - 1), -1, 0, 1, n - 1],
                    format="csr") / grid.dtheta ** 2


def assemble_operator(grid: CylinderGrid) -> SymmetricSparseMatrix:
    """A = I_θ ⊗ L_x + L_θ ⊗ I_x, aproximação SPD de -Δ_flat."""
    operator = (sp.kron(sp.identity(grid.n_theta), x_laplacian(grid))
                + sp.kron(theta_laplacian(grid), sp.identity(grid.n_x)))
    return SymmetricSparseMatrix(operator.tocsr())


def assemble_weight(grid: CylinderGrid, pert: ConformalPerturbation) -> DiagonalWeightMatrix:
    """B_ii = e^{2εf₀(x_i, θ_i)}·dx·dθ."""
    x, theta = grid.mesh()
    return DiagonalWeightMatrix(pert.conformal_factor(x, theta) * grid.cell_area)


# -- autovalores ---------------------------------------------------------------

def perturbed_eigenvalues(grid: CylinderGrid, pert: ConformalPerturbation, count: int = 1,
                          tol: float = DEFAULT_TOL, seed: int = DEFAULT_SEED) -> List[FdEigenResult]:
    """
    Os `count` menores autovalores do problema generalizado, convertidos por
    λ_cont = dx·dθ·ι.

    Raises:
        SolverError: Sem convergência do autossolver
    """
    a = assemble_operator(grid)
    b = assemble_weight(grid, pert)
    pairs = generalized_smallest_eigenpairs(a, b, count=count, tol=tol, seed=seed)
    results = [FdEigenResult(iota=p.value, lambda_cont=grid.cell_area * p.value, residual=p.residual_norm,
                             grid=grid, vector=p.vector) for p in pairs]
    logger.info(f"ε={pert.epsilon:g} em {grid.n_x}x{grid.n_theta}: λ_cont = {results[0].lambda_cont:.6f}")
    return results


def perturbed_ground_eigenvalue(grid: CylinderGrid, pert: ConformalPerturbation, tol: float = DEFAULT_TOL,
                                seed: int = DEFAULT_SEED) -> FdEigenResult:
    """Menor autovalor generalizado (via redução simétrica e iteração inversa)."""
    return perturbed_eigenvalues(grid, pert, count=1, tol=tol, seed=seed)[0]


def cylinder_eigenvalue_exact(h: float, m: int, k: int) -> float:
    """λ_{m,k} = (mπ/h)² + k²; o fundamental é m = 1, k = 0."""
    if m < 1:
        raise DomainError(f"m deve ser >= 1, recebido {m}")
    if not h > 0:
        raise DomainError(f"h deve ser positivo, recebido {h}")
    return (m * math.pi / h) ** 2 + k ** 2


def discrete_eigenvalue_exact(grid: CylinderGrid, m: int, k: int) -> float:
    """
    Espectro fechado do operador discreto sem perturbação (já em unidades de λ_cont):
    4/dx²·sen²(mπdx/(2h)) + 4/dθ²·sen²(k·dθ/2).
    """
    if not 1 <= m <= grid.n_x:
        raise DomainError(f"m fora de [1, {grid.n_x}]: {m}")
    return (4.0 / grid.dx ** 2 * math.sin(m * math.pi * grid.dx / (2.0 * grid.h)) ** 2
            + 4.0 / grid.dtheta ** 2 * math.sin(k * grid.dtheta / 2.0) ** 2)


def cylinder_spectrum(h: float, count: int) -> List[float]:
    """Os `count` menores autovalores exatos, repetidos conforme a multiplicidade (k ≠ 0 é duplo)."""
    if count < 1:
        raise DomainError(f"count deve ser positivo, recebido {count}")
    values = []
    for m in range(1, count + 1):
        for k in range(0, count + 1):
            value = cylinder_eigenvalue_exact(h, m, k)
            values.extend([value] if k == 0 else [value, value])
    return sorted(values)[:count]


# -- déficit -------------------------------------------------------------------

def cylinder_deficit(grid: CylinderGrid, pert: ConformalPerturbation) -> float:
    """
    D = (1/h²)∫ e^{-2εf₀}|ε∇f₀|² dA pela regra do ponto médio: cada nó da grade
    é o centro de uma célula dx x dθ e o gradiente é o analítico.
    """
    if pert.epsilon == 0.0:
        return 0.0
    x, theta = grid.mesh()
    return float(np.sum(pert.deficit_density(x, theta)) * grid.cell_area / grid.h ** 2)


def continuum_deficit(h: float, pert: ConformalPerturbation) -> float:
    """O mesmo integral por quadratura adaptativa 2-D."""
    if pert.epsilon == 0.0:
        return 0.0
    value, _ = integrate.dblquad(lambda theta, x: float(pert.deficit_density(x, theta)),
                                 0.0, h, 0.0, 2.0 * math.pi, epsabs=0.0, epsrel=1e-10)
    return value / h ** 2


def small_deficit_closed_form(h: float, pert: ConformalPerturbation) -> float:
    """ε²·∫|∇f₀|² dA/h²; para h = 1 e k = 1 vale ε²(π³ + π)/2."""
    return pert.epsilon ** 2 * pert.profile.gradient_energy() / h ** 2


def first_order_shift(grid: CylinderGrid, pert: ConformalPerturbation, tol: float = DEFAULT_TOL,
                      seed: int = DEFAULT_SEED, unperturbed: Optional[FdEigenResult] = None) -> float:
    """
    Previsão de Rayleigh de primeira ordem -2λ₀∫εf₀φ₀² dA, com φ₀ o modo
    fundamental não perturbado na mesma grade (ΣB φ₀² = 1).

    Para o perfil padrão (k = 1) a média em θ de f₀ é nula e a previsão é 0.
    `unperturbed` reaproveita um solve com ε = 0 já feito na mesma grade.
    """
    if unperturbed is None:
        unperturbed = perturbed_ground_eigenvalue(grid, ConformalPerturbation(0.0, pert.profile), tol=tol, seed=seed)
    x, theta = grid.mesh()
    weighted = float(np.sum(pert.profile.value(x, theta) * unperturbed.vector ** 2) * grid.cell_area)
    return -2.0 * unperturbed.lambda_cont * pert.epsilon * weighted
