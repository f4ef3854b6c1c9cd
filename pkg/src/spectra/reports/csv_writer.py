# src/spectra/reports/csv_writer.py
"""
Escrita dos CSV: linhas de metadados com `#` (versão, subcomando e a
configuração efetiva completa), cabeçalho e linhas com formatação numérica
fixa (notação científica para 0 < |x| < 1e-4).
"""

import csv
import logging
import math
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from spectra import __version__

logger = logging.getLogger("ReportCSV")

SCIENTIFIC_BELOW = 1e-4


def format_number(value: Any, precision: int = 6) -> str:
    """
    Formata um campo do CSV.

    Example:
        >>> format_number(1.95198, 6)
        '1.951980'
        >>> format_number(1.623593e-7, 6)
        '1.623593e-07'
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if value != 0.0 and abs(value) < SCIENTIFIC_BELOW:
            return f"{value:.{precision}e}"
        return f"{value:.{precision}f}"
    if hasattr(value, "__float__"):
        return format_number(float(value), precision)
    return str(value)


def metadata_lines(subcommand: str, metadata: Sequence[Tuple[str, str]]) -> List[str]:
    lines = [f"# spectra_version = {__version__}", f"# subcommand = {subcommand}"]
    lines.extend(f"# {key} = {value}" for key, value in metadata)
    return lines


def write_csv(path, columns: Sequence[str], rows: Iterable[Dict[str, Any]], subcommand: str,
              metadata: Sequence[Tuple[str, str]], precision: int = 6) -> Path:
    """
    Grava um CSV UTF-8 com metadados, cabeçalho e linhas.

    Colunas ausentes numa linha saem vazias.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        for line in metadata_lines(subcommand, metadata):
            f.write(line + "\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_number(row.get(column), precision) for column in columns])
    logger.info(f"CSV salvo em {path}")
    return path


def read_csv(path) -> Tuple[Dict[str, str], List[Dict[str, str]]]:
    """Lê um CSV do spectra: (metadados, linhas como dicionários de strings)."""
    metadata: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as f:
        lines = f.read().splitlines()
    body = []
    for line in lines:
        if line.startswith("#") and not body:
            key, _, value = line.lstrip("#").partition("=")
            metadata[key.strip()] = value.strip()
        else:
            body.append(line)
    return metadata, list(csv.DictReader(body))
