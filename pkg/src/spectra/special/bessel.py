# src/spectra/special/bessel.py
"""
Funções de Bessel de ordem inteira e raízes da função produto cruzado

    F_n(k) = J_n(ka) Y_n(kb) - J_n(kb) Y_n(ka),

cujas raízes positivas ao quadrado são os autovalores de Dirichlet do anel
concêntrico {a < |z| < b} no modo angular n.

A avaliação de J_n, Y_n e derivadas fica com scipy.special; este módulo cuida
dos domínios de validade e da busca de raízes (varredura, bissecção até largura
<= 1e-13 e polimento por Brent dentro do colchete verificado, no lugar de um
único passo de secante).
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Union

import numpy as np
from scipy import optimize, special

from spectra.errors import BracketError, DomainError

logger = logging.getLogger("BesselRoots")

MAX_ORDER = 50
MIN_Y_ARGUMENT = 1e-6
BRACKET_WIDTH = 1e-13
ROOT_TOLERANCE = 1e-12
SCAN_CHUNK = 65536

ArrayLike = Union[float, np.ndarray]


def bessel_order(n) -> int:
    """Valida a ordem n (inteiro em [0, 50])."""
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"Ordem de Bessel deve ser inteira, recebido {n!r}")
    n = int(n)
    if not 0 <= n <= MAX_ORDER:
        raise DomainError(f"Ordem de Bessel fora do intervalo suportado [0, {MAX_ORDER}]: {n}")
    return n


def _check_argument(x: ArrayLike, minimum: float, strict: bool = True) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("Argumento de Bessel não finito")
    too_small = arr <= minimum if strict else arr < minimum
    if np.any(too_small):
        relation = ">" if strict else ">="
        raise DomainError(f"Argumento de Bessel deve ser {relation} {minimum}, recebido {arr.min()}")
    return arr


def _unwrap(value: np.ndarray, like: ArrayLike) -> ArrayLike:
    return float(value) if np.ndim(like) == 0 else value


def bessel_j(n, x: ArrayLike) -> ArrayLike:
    """J_n(x) para x > 0."""
    n = bessel_order(n)
    arr = _check_argument(x, 0.0)
    return _unwrap(special.jv(n, arr), x)


def bessel_y(n, x: ArrayLike) -> ArrayLike:
    """Y_n(x) para x >= 1e-6 (abaixo disso o regime log-singular é rejeitado)."""
    n = bessel_order(n)
    arr = _check_argument(x, MIN_Y_ARGUMENT, strict=False)
    return _unwrap(special.yv(n, arr), x)


def bessel_j_prime(n, x: ArrayLike) -> ArrayLike:
    """J_n'(x) = (J_{n-1} - J_{n+1})/2, com J_0' = -J_1."""
    n = bessel_order(n)
    arr = _check_argument(x, 0.0)
    return _unwrap(special.jvp(n, arr), x)


def bessel_y_prime(n, x: ArrayLike) -> ArrayLike:
    """Y_n'(x) = (Y_{n-1} - Y_{n+1})/2, com Y_0' = -Y_1."""
    n = bessel_order(n)
    arr = _check_argument(x, MIN_Y_ARGUMENT, strict=False)
    return _unwrap(special.yvp(n, arr), x)


def _cross(n: int, k: np.ndarray, a: float, b: float) -> np.ndarray:
    # sem validação: usado na varredura vetorizada
    return special.jv(n, k * a) * special.yv(n, k * b) - special.jv(n, k * b) * special.yv(n, k * a)


def cross_product(n, k: ArrayLike, a: float, b: float, ordered: bool = True) -> ArrayLike:
    """
    Avalia F_n(k) = J_n(ka) Y_n(kb) - J_n(kb) Y_n(ka).

    Args:
        n: Ordem angular
        k: Número de onda (> 0), escalar ou array
        a: Raio interno
        b: Raio externo
        ordered: Se True exige 0 < a < b; com False avalia a fórmula para
            quaisquer raios positivos (antissimétrica na troca a <-> b)

    Raises:
        DomainError: a >= b (com ordered), argumentos fora do domínio de Y
    """
    n = bessel_order(n)
    if not (a > 0 and b > 0):
        raise DomainError(f"Raios devem ser positivos, recebido a={a}, b={b}")
    if ordered and not a < b:
        raise DomainError(f"Exige-se a < b, recebido a={a}, b={b}")
    karr = _check_argument(k, 0.0)
    _check_argument(karr * min(a, b), MIN_Y_ARGUMENT, strict=False)
    return _unwrap(_cross(n, karr, a, b), k)


@dataclass(frozen=True)
class CrossProductRoot:
    """
    Raiz de F_n com o colchete de mudança de sinal que a certifica.

    Attributes:
        k: Raiz polida
        lower: Extremo inferior do colchete (largura <= 1e-13)
        upper: Extremo superior do colchete
        residual: |F_n(k)|
    """
    k: float
    lower: float
    upper: float
    residual: float

    @property
    def width(self) -> float:
        return self.upper - self.lower


def _refine(n: int, a: float, b: float, lo: float, hi: float, f_lo: float) -> CrossProductRoot:
    """
    Bissecção até largura <= 1e-13 e polimento por brentq no colchete.

    brentq substitui o passo único de secante: nunca sai do colchete e fica
    com o menor |F_n| entre os extremos e o ponto polido.
    """
    while hi - lo > BRACKET_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = float(_cross(n, np.asarray(mid), a, b))
        if f_mid == 0.0:
            return CrossProductRoot(k=mid, lower=mid, upper=mid, residual=0.0)
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid

    f_hi = float(_cross(n, np.asarray(hi), a, b))
    candidates = [(abs(f_lo), lo), (abs(f_hi), hi)]
    if f_lo * f_hi < 0:
        polished = optimize.brentq(lambda k: float(_cross(n, np.asarray(k), a, b)), lo, hi,
                                   xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=200)
        candidates.append((abs(float(_cross(n, np.asarray(polished), a, b))), polished))
    residual, k = min(candidates)
    return CrossProductRoot(k=float(k), lower=float(lo), upper=float(hi), residual=float(residual))


def bracket_cross_product_roots(n, a: float, b: float, count: int,
                                k_limit: Optional[float] = None) -> List[CrossProductRoot]:
    """
    Localiza as primeiras `count` raízes de F_n por varredura em k com passo
    min(π/(b-a), 0.1)/4 a partir de k = min(1e-3/a, 1/b), refinando cada
    mudança de sinal.

    O início fica abaixo de j_{0,1}/b <= k_{n,1} (o anel está contido no disco
    de raio b) e F_n(0⁺) > 0 para todo n, então F_n(k_start) <= 0 indicaria
    raízes perdidas antes da varredura.

    Args:
        n: Ordem angular
        a: Raio interno
        b: Raio externo
        count: Número de raízes
        k_limit: Limite da varredura (padrão estimado pelas assintóticas)

    Returns:
        List[CrossProductRoot]: Raízes estritamente crescentes

    Raises:
        BracketError: Menos de `count` raízes no intervalo varrido, ou F_n já
            negativa no início da varredura
        DomainError: Anel largo demais (k·a abaixo do domínio de Y no início)
    """
    n = bessel_order(n)
    if not 0 < a < b:
        raise DomainError(f"Exige-se 0 < a < b, recebido a={a}, b={b}")
    if count < 1:
        raise DomainError(f"count deve ser positivo, recebido {count}")

    spacing = math.pi / (b - a)
    step = min(spacing, 0.1) / 4.0
    k_start = min(1e-3 / a, 1.0 / b)
    if k_start * a < MIN_Y_ARGUMENT:
        raise DomainError(f"Anel (a, b) = ({a}, {b}) largo demais: k·a = {k_start * a:.3g} < {MIN_Y_ARGUMENT}")
    with np.errstate(all="ignore"):
        f_start = float(_cross(n, np.asarray(k_start), a, b))
    if math.isfinite(f_start) and f_start <= 0.0:
        raise BracketError(
            f"F_{n}({a}, {b}) = {f_start:.3e} <= 0 em k = {k_start:.6g}: raiz abaixo do início da varredura",
            scan_range=(0.0, k_start),
        )
    if k_limit is None:
        k_limit = k_start + (count + 10) * spacing + 2.0 * n / a

    roots: List[CrossProductRoot] = []
    chunk_start = k_start
    offset = 0
    with np.errstate(all="ignore"):
        while chunk_start < k_limit and len(roots) < count:
            # a amostra 0 repete o fim do bloco anterior
            ks = k_start + step * (offset + np.arange(SCAN_CHUNK + 1))
            ks = ks[ks <= k_limit + step]
            if ks.size < 2:
                break
            fs = _cross(n, ks, a, b)
            finite = np.isfinite(fs)
            exact = np.flatnonzero(finite & (fs == 0.0))
            crossing = np.flatnonzero(finite[:-1] & finite[1:] & (fs[:-1] * fs[1:] < 0.0))
            events = sorted([(int(i), True) for i in exact if i > 0] + [(int(i), False) for i in crossing])
            for index, is_exact in events:
                if is_exact:
                    k_zero = float(ks[index])
                    roots.append(CrossProductRoot(k=k_zero, lower=k_zero, upper=k_zero, residual=0.0))
                else:
                    roots.append(_refine(n, a, b, float(ks[index]), float(ks[index + 1]), float(fs[index])))
                if len(roots) >= count:
                    break
            offset += ks.size - 1
            chunk_start = float(ks[-1])

    if len(roots) < count:
        raise BracketError(
            f"Encontradas {len(roots)} de {count} raízes de F_{n} para (a, b) = ({a}, {b}) "
            f"na varredura k ∈ [{k_start:.6g}, {k_limit:.6g}]",
            scan_range=(k_start, k_limit),
        )

    for root in roots:
        scale = max(1.0, _cross_scale(n, root.k, a, b))
        if root.residual > ROOT_TOLERANCE * scale:
            raise BracketError(
                f"Raiz k={root.k:.15g} de F_{n} com resíduo {root.residual:.3e} acima da tolerância",
                scan_range=(root.lower, root.upper),
            )
    logger.debug(f"F_{n}({a}, {b}): raízes {[r.k for r in roots]}")
    return roots


def _cross_scale(n: int, k: float, a: float, b: float) -> float:
    return float(abs(special.jv(n, k * a) * special.yv(n, k * b))
                 + abs(special.jv(n, k * b) * special.yv(n, k * a)))


def cross_product_roots(n, a: float, b: float, count: int) -> List[float]:
    """As primeiras `count` raízes positivas k_{n,1} < k_{n,2} < ... de F_n."""
    return [root.k for root in bracket_cross_product_roots(n, a, b, count)]


def bisect_root(n, a: float, b: float, lower: float, upper: float, width: float = 1e-15) -> float:
    """
    Raiz por bissecção pura num colchete dado (caminho independente do
    polimento por Brent, usado como oráculo).
    """
    n = bessel_order(n)
    f_lo = float(_cross(n, np.asarray(lower), a, b))
    f_hi = float(_cross(n, np.asarray(upper), a, b))
    if f_lo == 0.0:
        return float(lower)
    if f_hi == 0.0:
        return float(upper)
    if (f_lo < 0) == (f_hi < 0):
        raise BracketError(f"Sem mudança de sinal em [{lower}, {upper}]", scan_range=(lower, upper))
    lo, hi = float(lower), float(upper)
    while hi - lo > width * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = float(_cross(n, np.asarray(mid), a, b))
        if f_mid == 0.0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def wronskian_defect(n, x: ArrayLike) -> ArrayLike:
    """J_{n+1}(x) Y_n(x) - J_n(x) Y_{n+1}(x) - 2/(πx)."""
    n = bessel_order(n)
    arr = _check_argument(x, MIN_Y_ARGUMENT, strict=False)
    value = special.jv(n + 1, arr) * special.yv(n, arr) - special.jv(n, arr) * special.yv(n + 1, arr)
    return _unwrap(value - 2.0 / (np.pi * arr), x)
