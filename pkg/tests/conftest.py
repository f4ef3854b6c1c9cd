# tests/conftest.py
import os
import sys
from pathlib import Path

import pytest

# Adiciona o diretório src ao path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from spectra.annulus import AnnulusGeometry  # noqa: E402


@pytest.fixture
def annulus_1_5():
    """Anel (1, 5), primeira linha da tabela publicada."""
    return AnnulusGeometry(1.0, 5.0)


@pytest.fixture
def out_dir(tmp_path):
    path = tmp_path / "output"
    path.mkdir()
    return path


@pytest.fixture
def golden():
    """Lê uma tabela publicada de tests/data como lista de linhas."""
    from spectra.reports import read_csv

    def _load(name):
        return read_csv(Path(__file__).parent / "data" / f"{name}_golden.csv")[1]
    return _load
