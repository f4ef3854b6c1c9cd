# src/spectra/errors.py
"""
Exceções do pacote spectra.

Cada exceção carrega um `exit_code`, usado pela CLI para codificar o resultado
do processo (0 = bandas ok, 1 = falha numérica, 2 = configuração, 3 = solver).

Example:
    >>> from spectra.errors import SolverError
    >>> raise SolverError("não convergiu", best_residual=1e-6, iterations=500)
"""

import inspect
import logging
from functools import wraps
from typing import Optional, Tuple

logger = logging.getLogger("Errors")


class SpectraError(Exception):
    """Exceção base do pacote."""
    exit_code = 1


class ConfigError(SpectraError):
    """Parâmetro de execução inválido ou arquivo de configuração malformado."""
    exit_code = 2


class DomainError(SpectraError, ValueError):
    """Argumento fora do domínio de validade (raio, ordem, grade...)."""
    exit_code = 2


class DimensionError(DomainError):
    """Dimensões incompatíveis entre matrizes/vetores."""


class ExtinctionError(DomainError):
    """O círculo interno some antes do tempo pedido (a0² - 2t <= 0)."""


class SolverError(SpectraError):
    """
    Falha de convergência de um solver iterativo.

    Attributes:
        best_residual: Melhor resíduo obtido antes de desistir
        iterations: Número de iterações gastas
    """
    exit_code = 3

    def __init__(self, message: str, best_residual: Optional[float] = None,
                 iterations: Optional[int] = None):
        super().__init__(message)
        self.best_residual = best_residual
        self.iterations = iterations


class BreakdownError(SolverError):
    """Breakdown em sistema indefinido ou singular (pivô ou curvatura <= 0)."""

    def __init__(self, message: str, pivot: Optional[int] = None,
                 iterations: Optional[int] = None):
        super().__init__(message, iterations=iterations)
        self.pivot = pivot


class BracketError(SpectraError):
    """Não foi possível isolar raízes dentro do limite de varredura."""
    exit_code = 3

    def __init__(self, message: str, scan_range: Optional[Tuple[float, float]] = None):
        super().__init__(message)
        self.scan_range = scan_range


class ModeCrossingError(SpectraError):
    """O modo minimizante muda sob a perturbação (autovalor não simples)."""
    exit_code = 3

    def __init__(self, message: str, modes: Optional[Tuple] = None):
        super().__init__(message)
        self.modes = modes


def retry_on_solver_failure(max_retries: int = 2, budget_kwarg: str = "max_iter"):
    """
    Decorator que refaz uma chamada de solver dobrando o orçamento de iterações.

    Só reage a `SolverError` que não seja breakdown (breakdown não melhora com
    mais iterações).

    Args:
        max_retries: Número de novas tentativas após a primeira
        budget_kwarg: Nome do argumento com o orçamento de iterações
    """
    def decorator(func):
        default_budget = inspect.signature(func).parameters[budget_kwarg].default

        @wraps(func)
        def wrapper(*args, **kwargs):
            budget = kwargs.pop(budget_kwarg, default_budget)
            last_exception = None
            for attempt in range(max_retries + 1):
                try:
                    return func(*args, **{budget_kwarg: budget}, **kwargs)
                except BreakdownError:
                    raise
                except SolverError as e:
                    last_exception = e
                    logger.warning(
                        f"Tentativa {attempt + 1}/{max_retries + 1} falhou "
                        f"(resíduo {e.best_residual}); dobrando {budget_kwarg} para {budget * 2}"
                    )
                    budget *= 2

            logger.error(f"Todas as {max_retries + 1} tentativas falharam. Último erro: {last_exception}")
            raise last_exception
        return wrapper
    return decorator
