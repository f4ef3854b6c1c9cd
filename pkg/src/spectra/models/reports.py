# src/spectra/models/reports.py
"""
Modelos de dados dos relatórios: espectro de uma configuração, resíduos de
identidades variacionais e trajetórias do fluxo por encurtamento de curvas.

Example:
    >>> report = IdentityResidualReport("topping", left=-1.16432, right=-1.16432, step=1e-5)
    >>> report.relative_residual
    0.0
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from spectra.errors import DomainError


@dataclass(frozen=True)
class IdentityResidualReport:
    """
    Os dois lados de uma identidade e o resíduo entre eles.

    Os resíduos são derivados de `left` e `right` na construção, então
    recalculá-los reproduz os valores armazenados exatamente.

    Attributes:
        identity: Nome da identidade ("topping", "hadamard", ...)
        left: Lado esquerdo (em geral a diferença finita)
        right: Lado direito (em geral a fórmula fechada)
        step: Passo de diferença finita usado (0 quando não se aplica)
        time: Instante da trajetória
        a: Raio interno no instante
        b: Raio externo no instante
        band: Tolerância relativa de aceitação (None = só reportar)
    """
    identity: str
    left: float
    right: float
    step: float = 0.0
    time: float = 0.0
    a: Optional[float] = None
    b: Optional[float] = None
    band: Optional[float] = None
    absolute_residual: float = field(init=False)
    relative_residual: float = field(init=False)

    def __post_init__(self):
        absolute = abs(self.left - self.right)
        scale = max(abs(self.left), abs(self.right))
        object.__setattr__(self, "absolute_residual", absolute)
        object.__setattr__(self, "relative_residual", absolute / scale if scale > 0 else 0.0)

    @property
    def passed(self) -> bool:
        return self.band is None or self.relative_residual <= self.band

    def to_dict(self) -> Dict:
        return {
            "identity": self.identity,
            "time": self.time,
            "a": self.a,
            "b": self.b,
            "left": self.left,
            "right": self.right,
            "absolute_residual": self.absolute_residual,
            "relative_residual": self.relative_residual,
            "step": self.step,
            "band": self.band,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class SpectralReport:
    """
    Comparação espectral de um anel com o cilindro plano de mesmo módulo.

    Attributes:
        a: Raio interno
        b: Raio externo
        eigenvalue: λ₁ do anel (Bessel)
        lambda_cyl: (π/h)²
        energy: E
        modulus: h
        deficit: D
        mode: (n, s) do modo minimizante
        boundary_integral: ∫𝒱(∂_ν φ)² com as velocidades de CSF
        weight_sup: ‖𝒱‖_∞ nas fronteiras
        epsilon0: Limiar de pequeno déficit usado na classificação
    """
    a: float
    b: float
    eigenvalue: float
    lambda_cyl: float
    energy: float
    modulus: float
    deficit: float
    mode: Tuple[int, int] = (0, 1)
    boundary_integral: float = 0.0
    weight_sup: float = 0.0
    epsilon0: float = 1e-2

    @property
    def sqrt_deficit(self) -> float:
        return math.sqrt(self.deficit)

    @property
    def sqrt_energy(self) -> float:
        return math.sqrt(self.energy)

    @property
    def gap(self) -> float:
        """λ(A) - λ_cyl(h), com sinal."""
        return self.eigenvalue - self.lambda_cyl

    @property
    def regime(self) -> str:
        return "small-deficit regime" if self.deficit <= self.epsilon0 else "large-deficit regime"

    def to_dict(self) -> Dict:
        return {
            "a": self.a,
            "b": self.b,
            "E": self.energy,
            "D": self.deficit,
            "sqrt_D": self.sqrt_deficit,
            "lambda_ann": self.eigenvalue,
            "lambda_cyl": self.lambda_cyl,
            "h": self.modulus,
            "gap": self.gap,
            "regime": self.regime,
            "mode_n": self.mode[0],
            "mode_s": self.mode[1],
            "boundary_integral": self.boundary_integral,
            "weight_sup": self.weight_sup,
            "sqrt_E": self.sqrt_energy,
        }


@dataclass(frozen=True)
class CsfSnapshot:
    """Estado do anel num instante do fluxo."""
    time: float
    a: float
    b: float
    energy: float
    modulus: float
    deficit: float
    eigenvalue: float

    @property
    def modulus_rate(self) -> float:
        """dh/dt = (1/a² - 1/b²)/(2π)."""
        return (1.0 / self.a ** 2 - 1.0 / self.b ** 2) / (2.0 * math.pi)

    @property
    def energy_rate(self) -> float:
        """dE/dt = -D (identidade exata para círculos concêntricos)."""
        return -self.deficit

    def to_dict(self) -> Dict:
        return {
            "t": self.time,
            "a": self.a,
            "b": self.b,
            "E": self.energy,
            "h": self.modulus,
            "D": self.deficit,
            "lambda_1": self.eigenvalue,
            "dh_dt": self.modulus_rate,
            "dE_dt": self.energy_rate,
        }


@dataclass(frozen=True)
class CsfTrajectory:
    """
    Trajetória exata de dois círculos concêntricos sob CSF.

    Attributes:
        a0: Raio interno inicial
        b0: Raio externo inicial
        snapshots: Estados em tempos estritamente crescentes
    """
    a0: float
    b0: float
    snapshots: Tuple[CsfSnapshot, ...]

    def __post_init__(self):
        if not self.snapshots:
            raise DomainError("Trajetória sem amostras")
        times = [s.time for s in self.snapshots]
        if any(t1 <= t0 for t0, t1 in zip(times, times[1:])):
            raise DomainError("Tempos da trajetória devem ser estritamente crescentes")
        if any(s.a <= 0 for s in self.snapshots):
            raise DomainError("Raio interno não positivo na trajetória")

    @property
    def times(self) -> List[float]:
        return [s.time for s in self.snapshots]

    def _increasing(self, values: List[float]) -> List[int]:
        return [i + 1 for i, (v0, v1) in enumerate(zip(values, values[1:])) if not v1 > v0]

    def modulus_violations(self) -> List[int]:
        """Índices onde h(t) não cresce estritamente."""
        return self._increasing([s.modulus for s in self.snapshots])

    def energy_violations(self) -> List[int]:
        """Índices onde E(t) não decresce estritamente."""
        return self._increasing([-s.energy for s in self.snapshots])

    def deficit_violations(self) -> List[int]:
        """Índices onde D(t) não cresce estritamente."""
        return self._increasing([s.deficit for s in self.snapshots])

    def to_rows(self) -> List[Dict]:
        return [s.to_dict() for s in self.snapshots]
