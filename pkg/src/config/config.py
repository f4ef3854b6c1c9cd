# src/config/config.py
import os
from pathlib import Path

from dotenv import load_dotenv

"""
Configuração do projeto.
Define os padrões globais lidos de variáveis de ambiente (ou de um .env na raiz).
Os parâmetros de cada execução ficam em spectra.utils.config_manager.
"""

load_dotenv()

BASE_DIR = Path(__file__).parent.parent.parent


class Config:
    """
    Configurações globais do spectra.

    Attributes:
        LOG_LEVEL: Nível do console (SPECTRA_LOG_LEVEL)
        LOG_DIR: Diretório dos arquivos de log (SPECTRA_LOG_DIR)
        OUT_DIR: Diretório padrão das saídas CSV/SVG (SPECTRA_OUT_DIR)
        PRECISION: Casas decimais no CSV (SPECTRA_PRECISION)
        SEED: Semente do vetor inicial do autossolver (SPECTRA_SEED)
        WORKERS: Threads do pool de linhas (SPECTRA_WORKERS)
        EIGEN_TOL: Tolerância de resíduo do autossolver (SPECTRA_EIGEN_TOL)
        FD_STEP: Passo das diferenças finitas temporais (SPECTRA_FD_STEP)
    """

    # Logging
    LOG_LEVEL = os.getenv('SPECTRA_LOG_LEVEL', 'INFO')
    LOG_DIR = os.getenv('SPECTRA_LOG_DIR', 'logs')

    # Saídas
    OUT_DIR = os.getenv('SPECTRA_OUT_DIR', 'output')
    PRECISION = int(os.getenv('SPECTRA_PRECISION', 6))

    # Numérico
    SEED = int(os.getenv('SPECTRA_SEED', 20240517))
    WORKERS = int(os.getenv('SPECTRA_WORKERS', 4))
    EIGEN_TOL = float(os.getenv('SPECTRA_EIGEN_TOL', 1e-10))
    FD_STEP = float(os.getenv('SPECTRA_FD_STEP', 1e-5))

    @classmethod
    def as_dict(cls) -> dict:
        return {name: getattr(cls, name) for name in
                ('LOG_LEVEL', 'LOG_DIR', 'OUT_DIR', 'PRECISION', 'SEED', 'WORKERS', 'EIGEN_TOL', 'FD_STEP')}
