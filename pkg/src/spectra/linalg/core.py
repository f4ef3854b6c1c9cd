# src/spectra/linalg/core.py
"""
Álgebra linear simétrica: armazenamento esparso, solves SPD e extração dos
menores autopares do problema generalizado A u = λ B u com B diagonal.

O problema generalizado é reduzido a Ã = B^{-1/2} A B^{-1/2} (simétrica) e os
menores autopares de Ã saem de uma iteração inversa em bloco com Rayleigh-Ritz,
usando gradiente conjugado (precondicionador diagonal) nos solves internos.

Example:
    >>> a = SymmetricSparseMatrix.from_dense(np.array([[2.0, -1.0], [-1.0, 2.0]]))
    >>> b = DiagonalWeightMatrix(np.array([1.0, 4.0]))
    >>> symmetric_reduce(a, b).to_dense()
    array([[ 2. , -0.5],
           [-0.5,  0.5]])
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import LinearOperator, cg, splu

from spectra.errors import (
    BreakdownError,
    DimensionError,
    DomainError,
    SolverError,
    retry_on_solver_failure,
)

logger = logging.getLogger("LinalgSolver")

DEFAULT_TOL = 1e-10
DEFAULT_SEED = 20240517
SPD_RESIDUAL_CONTRACT = 1e-10


@dataclass(frozen=True, eq=False)
class SymmetricSparseMatrix:
    """
    Matriz esparsa simétrica em formato CSR.

    A simetria é estrutural e exata: a montagem rejeita qualquer matriz cuja
    transposta difira em qualquer entrada.

    Attributes:
        matrix: Matriz scipy.sparse em CSR, sem pares (linha, coluna) duplicados
    """
    matrix: sp.csr_matrix = field(repr=False)

    def __post_init__(self):
        m = sp.csr_matrix(self.matrix, dtype=float)
        m.sum_duplicates()
        m.sort_indices()
        if m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise DimensionError(f"Matriz precisa ser quadrada e não vazia, recebido {m.shape}")
        if not np.all(np.isfinite(m.data)):
            raise DomainError("Matriz contém entradas não finitas")
        defect = abs(m - m.T)
        if defect.nnz and defect.max() != 0.0:
            raise DomainError(f"Matriz não é simétrica (defeito máximo {defect.max():.3e})")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_triplets(cls, dimension: int, rows, cols, values) -> "SymmetricSparseMatrix":
        """Monta a partir de listas (linha, coluna, valor); duplicatas são somadas."""
        if dimension < 1:
            raise DimensionError(f"Dimensão deve ser positiva, recebido {dimension}")
        coo = sp.coo_matrix((np.asarray(values, dtype=float), (np.asarray(rows), np.asarray(cols))),
                            shape=(dimension, dimension))
        return cls(coo.tocsr())

    @classmethod
    def from_dense(cls, array: np.ndarray) -> "SymmetricSparseMatrix":
        return cls(sp.csr_matrix(np.asarray(array, dtype=float)))

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def matvec(self, x: np.ndarray) -> np.ndarray:
        return self.matrix @ x

    def diagonal(self) -> np.ndarray:
        return self.matrix.diagonal()

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def transpose_defect(self) -> float:
        """Máximo |M - Mᵀ| (zero por construção)."""
        defect = abs(self.matrix - self.matrix.T)
        return float(defect.max()) if defect.nnz else 0.0


@dataclass(frozen=True, eq=False)
class DiagonalWeightMatrix:
    """
    Matriz de massa (peso) diagonal com entradas estritamente positivas.

    Attributes:
        diagonal: Vetor das entradas diagonais
    """
    diagonal: np.ndarray = field(repr=False)

    def __post_init__(self):
        d = np.asarray(self.diagonal, dtype=float).ravel()
        if d.size < 1:
            raise DimensionError("Matriz de peso vazia")
        if not np.all(np.isfinite(d)):
            raise DomainError("Matriz de peso contém entradas não finitas")
        bad = np.flatnonzero(d <= 0.0)
        if bad.size:
            raise DomainError(f"Entrada diagonal não positiva no índice {bad[0]}: {d[bad[0]]}")
        d.setflags(write=False)
        object.__setattr__(self, "diagonal", d)

    @property
    def dimension(self) -> int:
        return self.diagonal.size

    def apply(self, x: np.ndarray) -> np.ndarray:
        return self.diagonal * x if x.ndim == 1 else self.diagonal[:, None] * x

    def inv_sqrt(self) -> np.ndarray:
        return 1.0 / np.sqrt(self.diagonal)

    def total_mass(self) -> float:
        return float(self.diagonal.sum())


@dataclass(frozen=True, eq=False)
class EigenPair:
    """
    Autopar com o resíduo registrado.

    Attributes:
        value: Autovalor
        vector: Autovetor (norma B unitária)
        residual_norm: ‖A v - λ B v‖₂ / ‖v‖₂
    """
    value: float
    vector: np.ndarray = field(repr=False)
    residual_norm: float


def _residual_norm(a: SymmetricSparseMatrix, value: float, vector: np.ndarray,
                   b: Optional[DiagonalWeightMatrix] = None) -> float:
    bv = vector if b is None else b.apply(vector)
    return float(np.linalg.norm(a.matvec(vector) - value * bv) / np.linalg.norm(vector))


def gershgorin_shift(m: SymmetricSparseMatrix) -> float:
    """
    Deslocamento σ >= 0 que torna M + σI positiva definida.

    Zero quando a cota inferior de Gershgorin já é positiva; senão leva essa
    cota a 1e-3 da maior cota de linha, acima de zero.
    """
    diag = m.diagonal()
    radius = np.asarray(abs(m.matrix).sum(axis=1)).ravel() - np.abs(diag)
    lower = float(np.min(diag - radius))
    if lower > 0.0:
        return 0.0
    upper = float(np.max(np.abs(diag) + radius))
    margin = 1e-3 * max(upper, abs(lower)) or 1.0
    return -lower + margin


def is_positive_definite(m: SymmetricSparseMatrix) -> bool:
    """Todos os pivôs de LU sem pivoteamento positivos (menores principais > 0)."""
    try:
        lu = splu(m.matrix.tocsc(), permc_spec="NATURAL", diag_pivot_thresh=0.0,
                  options={"SymmetricMode": True})
    except RuntimeError:
        return False
    if np.any(lu.perm_r != np.arange(m.dimension)):
        return False
    return bool(np.all(lu.U.diagonal() > 0.0))


def _fix_sign(vector: np.ndarray) -> np.ndarray:
    # componente de maior módulo positiva
    idx = int(np.argmax(np.abs(vector)))
    return -vector if vector[idx] < 0 else vector


def symmetric_reduce(a: SymmetricSparseMatrix, b: DiagonalWeightMatrix) -> SymmetricSparseMatrix:
    """
    Forma Ã = B^{-1/2} A B^{-1/2}.

    Cada entrada vira A[i,j] / sqrt(b_i b_j); como b_i b_j == b_j b_i em ponto
    flutuante, a simetria é preservada exatamente.

    Args:
        a: Operador simétrico
        b: Peso diagonal estritamente positivo

    Returns:
        SymmetricSparseMatrix: A matriz reduzida

    Raises:
        DimensionError: Se as dimensões não batem
    """
    if a.dimension != b.dimension:
        raise DimensionError(f"Dimensões incompatíveis: A tem {a.dimension}, B tem {b.dimension}")

    coo = a.matrix.tocoo()
    d = b.diagonal
    scaled = coo.data / np.sqrt(d[coo.row] * d[coo.col])
    reduced = sp.csr_matrix((scaled, (coo.row, coo.col)), shape=coo.shape)
    return SymmetricSparseMatrix(reduced)


def solve_spd(m: SymmetricSparseMatrix, rhs: np.ndarray, x0: Optional[np.ndarray] = None,
              max_iter: Optional[int] = None, restarts: int = 3) -> np.ndarray:
    """
    Resolve M x = rhs para M simétrica positiva definida por gradiente conjugado
    com precondicionador diagonal (Jacobi).

    Args:
        m: Matriz SPD
        rhs: Lado direito
        x0: Chute inicial opcional
        max_iter: Limite de iterações de CG por tentativa (padrão 10·n)
        restarts: Reinícios de CG a partir da última iterada se o resíduo
            verdadeiro não atingir o contrato

    Returns:
        np.ndarray: x com ‖Mx - rhs‖/‖rhs‖ <= 1e-10

    Raises:
        DimensionError: Se rhs não tem a dimensão de M
        BreakdownError: Pivô diagonal <= 0 ou curvatura não positiva
        SolverError: Contrato de resíduo não atingido
    """
    rhs = np.asarray(rhs, dtype=float)
    n = m.dimension
    if rhs.shape != (n,):
        raise DimensionError(f"rhs com forma {rhs.shape}, esperado ({n},)")

    rhs_norm = np.linalg.norm(rhs)
    if rhs_norm == 0.0:
        return np.zeros(n)

    diag = m.diagonal()
    bad = np.flatnonzero(diag <= 0.0)
    if bad.size:
        raise BreakdownError(f"Pivô diagonal não positivo no índice {bad[0]}: {diag[bad[0]]}",
                             pivot=int(bad[0]))

    inv_diag = 1.0 / diag
    preconditioner = LinearOperator((n, n), matvec=lambda v: inv_diag * v.ravel(), dtype=float)
    max_iter = max_iter or 10 * n

    iterations = 0

    def _count(_xk):
        nonlocal iterations
        iterations += 1

    x = None if x0 is None else np.asarray(x0, dtype=float)
    relative = np.inf
    for _ in range(restarts + 1):
        x, info = cg(m.matrix, rhs, x0=x, rtol=1e-12, atol=0.0, maxiter=max_iter,
                     M=preconditioner, callback=_count)
        if info < 0:
            raise BreakdownError("Entrada ilegal para o gradiente conjugado", iterations=iterations)

        curvature = float(rhs @ x)
        if not np.isfinite(curvature) or curvature <= 0.0:
            raise BreakdownError(f"Curvatura não positiva ({curvature:.3e}): matriz indefinida ou singular",
                                 iterations=iterations)

        relative = np.linalg.norm(m.matvec(x) - rhs) / rhs_norm
        if relative <= SPD_RESIDUAL_CONTRACT:
            logger.debug(f"CG convergiu em {iterations} iterações (resíduo {relative:.2e})")
            return x

    raise SolverError(f"CG não atingiu o contrato de resíduo após {iterations} iterações",
                      best_residual=float(relative), iterations=iterations)


@retry_on_solver_failure(max_retries=2)
def smallest_eigenpairs(m: SymmetricSparseMatrix, count: int, tol: float = DEFAULT_TOL,
                        seed: int = DEFAULT_SEED, max_iter: int = 500) -> List[EigenPair]:
    """
    Calcula os `count` menores autopares (algébricos) de uma matriz simétrica
    por iteração inversa em bloco. Matriz não positiva definida é deslocada
    para M + σI com σ de Gershgorin e os valores de Ritz são devolvidos sem σ.

    O bloco carrega vetores de guarda extras para acelerar a convergência;
    cada passo resolve M Y = X coluna a coluna (CG), ortonormaliza e faz
    Rayleigh-Ritz. O critério de parada é ‖M v - λ v‖ <= tol·max(1, |λ|).

    Args:
        m: Matriz simétrica (indefinida é aceita via deslocamento)
        count: Quantos autopares (count < dimensão)
        tol: Tolerância de resíduo
        seed: Semente do vetor inicial pseudoaleatório
        max_iter: Orçamento de iterações externas

    Returns:
        List[EigenPair]: Autopares em ordem crescente de autovalor

    Raises:
        DimensionError: count >= dimensão
        SolverError: Sem convergência dentro do orçamento
    """
    n = m.dimension
    if count < 1 or count >= n:
        raise DimensionError(f"count deve estar em [1, {n - 1}], recebido {count}")
    if not tol > 0.0:
        raise DomainError(f"tol deve ser positiva, recebido {tol}")

    sigma = 0.0 if is_positive_definite(m) else gershgorin_shift(m)
    shifted = m if sigma == 0.0 else SymmetricSparseMatrix(
        (m.matrix + sigma * sp.identity(n, format="csr")).tocsr())
    if sigma:
        logger.debug(f"Deslocamento de Gershgorin σ = {sigma:.6g}")

    block = min(n, max(2 * count, count + 3))
    rng = np.random.default_rng(seed)
    x, _ = np.linalg.qr(rng.standard_normal((n, block)))
    theta = np.full(block, np.nan)

    best = np.inf
    for iteration in range(1, max_iter + 1):
        y = np.empty_like(x)
        for j in range(block):
            guess = x[:, j] / theta[j] if np.isfinite(theta[j]) and theta[j] > 0 else None
            y[:, j] = solve_spd(shifted, x[:, j], x0=guess)

        q, _ = np.linalg.qr(y)
        projected = q.T @ (shifted.matrix @ q)
        theta, s = np.linalg.eigh(0.5 * (projected + projected.T))
        x = q @ s

        wanted = x[:, :count]
        values = theta[:count] - sigma
        residuals = np.linalg.norm(m.matrix @ wanted - wanted * values, axis=0)
        scaled = residuals / np.maximum(1.0, np.abs(values))
        best = min(best, float(scaled.max()))
        logger.debug(f"Iteração {iteration}: autovalores {values}, resíduo escalado {scaled.max():.2e}")

        if np.all(scaled <= tol):
            pairs = []
            for j in range(count):
                v = _fix_sign(x[:, j] / np.linalg.norm(x[:, j]))
                value = float(v @ (m.matrix @ v))
                pairs.append(EigenPair(value=value, vector=v, residual_norm=_residual_norm(m, value, v)))
            pairs.sort(key=lambda p: p.value)
            logger.info(f"Iteração inversa convergiu em {iteration} passos (n={n}, bloco={block})")
            return pairs

    raise SolverError(f"Iteração inversa não convergiu em {max_iter} passos",
                      best_residual=best, iterations=max_iter)


def generalized_smallest_eigenpairs(a: SymmetricSparseMatrix, b: DiagonalWeightMatrix, count: int = 1,
                                    tol: float = DEFAULT_TOL, seed: int = DEFAULT_SEED) -> List[EigenPair]:
    """
    Menores autopares de A x = ι B x via redução simétrica.

    Os vetores voltam por x = B^{-1/2} y, o que dá xᵀ B x = 1; o resíduo é
    recalculado com A e B originais.
    """
    reduced = symmetric_reduce(a, b)
    scale = b.inv_sqrt()
    pairs = []
    for pair in smallest_eigenpairs(reduced, count, tol=tol, seed=seed):
        vector = scale * pair.vector
        pairs.append(EigenPair(value=pair.value, vector=vector,
                               residual_norm=_residual_norm(a, pair.value, vector, b)))
    return pairs


def rayleigh_quotient(a: SymmetricSparseMatrix, vector: np.ndarray,
                      b: Optional[DiagonalWeightMatrix] = None) -> float:
    """vᵀ A v / vᵀ B v (B = I se omitida)."""
    denominator = vector @ (vector if b is None else b.apply(vector))
    return float(vector @ a.matvec(vector) / denominator)
