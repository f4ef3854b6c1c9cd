# src/spectra/flow/verify.py
"""
Evolução de anéis concêntricos por encurtamento de curvas (CSF) e verificação
numérica das identidades variacionais:

- Topping: dE/dt = -D ao longo do CSF;
- Hadamard: dλ/dt = -∫_{∂A} V (∂_ν φ)² dσ com métrica fixa;
- monotonicidade do módulo h(t) e do déficit D(t).

Cada círculo de raio r sob CSF satisfaz dr/dt = -1/r, logo r(t) = √(r₀² - 2t).
Com ν a normal exterior do anel, as velocidades normais são V = +1/a no círculo
interno e V = -1/b no externo.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from spectra.annulus import (
    DEFAULT_N_MAX,
    AnnulusGeometry,
    capacity_boundary_rate,
    capacity_deficit,
    capacity_energy,
    capacity_profile,
    ground_mode,
    modulus,
    rellich_boundary_integral,
)
from spectra.cylinder import cylinder_eigenvalue_exact
from spectra.errors import DomainError, ExtinctionError, ModeCrossingError
from spectra.models import CsfSnapshot, CsfTrajectory, IdentityResidualReport, SpectralReport
from spectra.special import cross_product_roots

logger = logging.getLogger("FlowVerify")

DEFAULT_FD_STEP = 1e-5
DEFAULT_EPSILON0 = 1e-2
TOPPING_BAND = 1e-6
HADAMARD_BAND = 1e-4
MOTIONS = ("csf", "frozen", "outer_expansion")


def csf_radius(r0: float, t: float) -> float:
    """r(t) = √(r₀² - 2t); levanta ExtinctionError quando o círculo some."""
    squared = r0 * r0 - 2.0 * t
    if squared <= 0.0:
        raise ExtinctionError(f"Círculo de raio inicial {r0} se extingue em t = {r0 * r0 / 2:g} (pedido t = {t:g})")
    return math.sqrt(squared)


@dataclass(frozen=True)
class BoundaryMotion:
    """
    Movimento das duas fronteiras do anel.

    Attributes:
        kind: "csf", "frozen" ou "outer_expansion"
        rate: Velocidade δ da fronteira externa em "outer_expansion"
    """
    kind: str = "csf"
    rate: float = 1.0

    def __post_init__(self):
        if self.kind not in MOTIONS:
            raise DomainError(f"Movimento desconhecido {self.kind!r}; opções: {', '.join(MOTIONS)}")

    def radii(self, a0: float, b0: float, t: float) -> Tuple[float, float]:
        if self.kind == "csf":
            return csf_radius(a0, t), csf_radius(b0, t)
        if self.kind == "frozen":
            return a0, b0
        return a0, b0 + self.rate * t

    def velocities(self, a: float, b: float) -> Tuple[float, float]:
        """Velocidades normais (V_in, V_out) na convenção da normal exterior do anel."""
        if self.kind == "csf":
            return 1.0 / a, -1.0 / b
        if self.kind == "frozen":
            return 0.0, 0.0
        return 0.0, self.rate

    def geometry(self, a0: float, b0: float, t: float) -> AnnulusGeometry:
        return AnnulusGeometry(*self.radii(a0, b0, t))


CSF = BoundaryMotion("csf")


def _check_admissible(a0: float, b0: float, t: float, fd_step: float, motion: BoundaryMotion):
    if not fd_step > 0:
        raise DomainError(f"fd_step deve ser positivo, recebido {fd_step}")
    if motion.kind == "csf" and a0 * a0 - 2.0 * (t + fd_step) <= 0.0:
        raise ExtinctionError(f"t + fd_step = {t + fd_step:g} atinge a extinção do círculo interno ({a0 * a0 / 2:g})")
    AnnulusGeometry(a0, b0)


def _central_difference(func: Callable[[float], float], t: float, step: float, richardson: bool) -> float:
    def central(delta: float) -> float:
        return (func(t + delta) - func(t - delta)) / (2.0 * delta)

    if not richardson:
        return central(step)
    return (4.0 * central(0.5 * step) - central(step)) / 3.0


def _snapshot(a0: float, b0: float, t: float) -> CsfSnapshot:
    geom = CSF.geometry(a0, b0, t)
    profile = capacity_profile(geom)
    return CsfSnapshot(time=t, a=geom.a, b=geom.b, energy=profile.energy, modulus=profile.modulus,
                       deficit=profile.deficit, eigenvalue=ground_mode(geom).eigenvalue)


def evolve_csf(a0: float, b0: float, t_end: float, steps: int, workers: int = 1) -> CsfTrajectory:
    """
    Trajetória fechada do CSF amostrada em steps + 1 tempos uniformes de 0 a t_end.

    Args:
        a0: Raio interno inicial
        b0: Raio externo inicial
        t_end: Tempo final (< a0²/2)
        steps: Número de intervalos
        workers: Threads para as amostras

    Returns:
        CsfTrajectory: Amostras com E, h, D e λ₁

    Raises:
        ExtinctionError: t_end atinge a extinção do círculo interno
    """
    AnnulusGeometry(a0, b0)
    if steps < 1:
        raise DomainError(f"steps deve ser positivo, recebido {steps}")
    if not t_end > 0:
        raise DomainError(f"t_end deve ser positivo, recebido {t_end}")
    if t_end >= a0 * a0 / 2.0:
        raise ExtinctionError(f"t_end = {t_end:g} atinge a extinção do círculo interno em {a0 * a0 / 2:g}")

    times = np.linspace(0.0, t_end, steps + 1)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        snapshots = tuple(executor.map(lambda t: _snapshot(a0, b0, float(t)), times))

    trajectory = CsfTrajectory(a0=a0, b0=b0, snapshots=snapshots)
    for name, violations in (("h crescente", trajectory.modulus_violations()),
                             ("E decrescente", trajectory.energy_violations()),
                             ("D crescente", trajectory.deficit_violations())):
        if violations:
            logger.warning(f"Trajetória ({a0}, {b0}): '{name}' violado nas amostras {violations}")
    logger.info(f"CSF ({a0}, {b0}) até t={t_end:g}: {len(snapshots)} amostras")
    return trajectory


def verify_topping(a0: float, b0: float, t: float = 0.0, fd_step: float = DEFAULT_FD_STEP,
                   richardson: bool = False, band: Optional[float] = TOPPING_BAND) -> IdentityResidualReport:
    """
    dE/dt por diferença central ao longo do CSF contra -D(a(t), b(t)).

    Raises:
        ExtinctionError: t + fd_step fora da trajetória
    """
    _check_admissible(a0, b0, t, fd_step, CSF)
    left = _central_difference(lambda s: capacity_energy(CSF.geometry(a0, b0, s)), t, fd_step, richardson)
    geom = CSF.geometry(a0, b0, t)
    report = IdentityResidualReport("topping", left=left, right=-capacity_deficit(geom), step=fd_step,
                                    time=t, a=geom.a, b=geom.b, band=band)
    logger.debug(f"Topping ({a0}, {b0}) t={t:g}: resíduo relativo {report.relative_residual:.3e}")
    return report


def verify_energy_variation(a0: float, b0: float, t: float = 0.0,
                            band: Optional[float] = 1e-12) -> IdentityResidualReport:
    """
    Forma de fronteira da variação de energia, -½∫V(∂_ν u)², contra -D.
    Com as velocidades de CSF a igualdade é algébrica.
    """
    geom = CSF.geometry(a0, b0, t)
    v_in, v_out = CSF.velocities(geom.a, geom.b)
    return IdentityResidualReport("energy_variation", left=capacity_boundary_rate(geom, v_in, v_out),
                                  right=-capacity_deficit(geom), time=t, a=geom.a, b=geom.b, band=band)


def verify_modulus_rate(a0: float, b0: float, t: float = 0.0, fd_step: float = DEFAULT_FD_STEP,
                        band: Optional[float] = TOPPING_BAND) -> IdentityResidualReport:
    """dh/dt por diferença central contra (1/a² - 1/b²)/(2π)."""
    _check_admissible(a0, b0, t, fd_step, CSF)
    left = _central_difference(lambda s: modulus(CSF.geometry(a0, b0, s)), t, fd_step, False)
    geom = CSF.geometry(a0, b0, t)
    right = (1.0 / geom.a ** 2 - 1.0 / geom.b ** 2) / (2.0 * math.pi)
    return IdentityResidualReport("modulus_rate", left=left, right=right, step=fd_step,
                                  time=t, a=geom.a, b=geom.b, band=band)


def _minimizer(geom: AnnulusGeometry, n_max: int = DEFAULT_N_MAX) -> Tuple[float, int]:
    """(λ₁, n) pelo menor k_{n,1} sobre n <= n_max, sem normalizar modos."""
    candidates = [(cross_product_roots(n, geom.a, geom.b, 1)[0] ** 2, n) for n in range(n_max + 1)]
    return min(candidates)


def verify_hadamard(a0: float, b0: float, t: float = 0.0, fd_step: float = DEFAULT_FD_STEP,
                    motion: BoundaryMotion = CSF, richardson: bool = False,
                    band: Optional[float] = HADAMARD_BAND) -> IdentityResidualReport:
    """
    dλ₁/dt por diferença central nos raios movidos contra a integral de
    fronteira -∫V(∂_ν φ)² dσ com o modo normalizado em t.

    Raises:
        ModeCrossingError: O minimizante deixa de ser (0, 1) em t ou nos raios perturbados
    """
    _check_admissible(a0, b0, t, fd_step, motion)
    geom = motion.geometry(a0, b0, t)
    mode = ground_mode(geom)
    if (mode.n, mode.s) != (0, 1):
        raise ModeCrossingError(f"Modo fundamental de {geom} é {mode.label()}, não (0, 1)", modes=((mode.n, mode.s),))

    def eigenvalue_at(s: float) -> float:
        value, n = _minimizer(motion.geometry(a0, b0, s))
        if n != mode.n:
            raise ModeCrossingError(f"Minimizante muda de n={mode.n} para n={n} em t={s:g}", modes=(mode.n, n))
        return value

    left = _central_difference(eigenvalue_at, t, fd_step, richardson)
    v_in, v_out = motion.velocities(geom.a, geom.b)
    right = -rellich_boundary_integral(mode, geom, v_in, v_out)
    report = IdentityResidualReport(f"hadamard_{motion.kind}", left=left, right=right, step=fd_step,
                                    time=t, a=geom.a, b=geom.b, band=band)
    logger.debug(f"Hadamard {motion.kind} ({a0}, {b0}) t={t:g}: {left:.10g} vs {right:.10g}")
    return report


def convergence_order(steps: Sequence[float], errors: Sequence[float]) -> List[float]:
    """Ordens observadas log(e_i/e_{i+1})/log(δ_i/δ_{i+1}) entre passos consecutivos."""
    if len(steps) != len(errors) or len(steps) < 2:
        raise DomainError("São necessários ao menos dois pares (passo, erro) de mesmo tamanho")
    return [math.log(e0 / e1) / math.log(s0 / s1)
            for s0, s1, e0, e1 in zip(steps, steps[1:], errors, errors[1:])]


def gap_report(geom: AnnulusGeometry, epsilon0: float = DEFAULT_EPSILON0) -> SpectralReport:
    """
    λ(A), λ_cyl(h) = (π/h)², D e a lacuna com sinal. A desigualdade de
    comparação não é afirmada; o regime (D vs ε₀) é só classificado.
    """
    mode = ground_mode(geom)
    profile = capacity_profile(geom)
    v_in, v_out = CSF.velocities(geom.a, geom.b)
    report = SpectralReport(
        a=geom.a, b=geom.b, eigenvalue=mode.eigenvalue,
        lambda_cyl=cylinder_eigenvalue_exact(profile.modulus, 1, 0),
        energy=profile.energy, modulus=profile.modulus, deficit=profile.deficit,
        mode=(mode.n, mode.s),
        boundary_integral=rellich_boundary_integral(mode, geom, v_in, v_out),
        weight_sup=max(abs(v_in), abs(v_out)),
        epsilon0=epsilon0,
    )
    logger.info(f"Lacuna ({geom.a}, {geom.b}): {report.gap:.6f} [{report.regime}]")
    return report


def csf_ricci_eigenvalue_rate(geom: AnnulusGeometry, curvature_K: float = 0.0) -> float:
    """
    dλ/dt = -∫V(∂_ν φ)² dσ + 2λK∫φ² sob CSF com curvatura ambiente constante K
    (∫φ² = 1 pela normalização).
    """
    mode = ground_mode(geom)
    v_in, v_out = CSF.velocities(geom.a, geom.b)
    return -rellich_boundary_integral(mode, geom, v_in, v_out) + 2.0 * mode.eigenvalue * curvature_K
