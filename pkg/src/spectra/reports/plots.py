# src/spectra/reports/plots.py
"""
Figuras estáticas em SVG 1.1 (backend SVG do matplotlib, sem data de criação
para que a saída seja reprodutível). Eixos em escala log quando os dados
atravessam mais de uma década; a escolha vai nos metadados da figura.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from spectra.reports.csv_writer import metadata_lines  # noqa: E402

logger = logging.getLogger("ReportPlots")

plt.rcParams["svg.hashsalt"] = "spectra"
plt.rcParams["svg.fonttype"] = "none"


def axis_scale(values: Sequence[float]) -> str:
    """'log' se todos positivos e cobrindo mais de uma década, senão 'linear'."""
    data = np.asarray([v for v in values if v is not None and np.isfinite(v)], dtype=float)
    if data.size < 2 or np.any(data <= 0):
        return "linear"
    return "log" if data.max() / data.min() > 10.0 else "linear"


def _stamp(subcommand: Optional[str], metadata: Sequence[Tuple[str, str]]) -> List[str]:
    # mesmas linhas do cabeçalho dos CSVs, sem o "# "
    if subcommand is None:
        return []
    return [line[2:] for line in metadata_lines(subcommand, metadata)]


def _save(fig, path: Path, title: str, scales: Dict[str, str], stamp: Sequence[str] = ()) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    description = ", ".join(f"{axis}: {scale}" for axis, scale in scales.items())
    full = "\n".join([description, *stamp])
    fig.savefig(path, format="svg", metadata={"Date": None, "Title": title, "Description": full})
    plt.close(fig)
    logger.info(f"Figura salva em {path} ({description})")
    return path


def _line_figure(path: Path, title: str, x: Sequence[float], series: Dict[str, Sequence[float]],
                 xlabel: str, ylabel: str, marker: str = "o", stamp: Sequence[str] = ()) -> Path:
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    all_y: List[float] = []
    for label, y in series.items():
        ax.plot(x, y, marker=marker, label=label)
        all_y.extend(y)
    scales = {"x": axis_scale(x), "y": axis_scale(all_y)}
    ax.set_xscale(scales["x"])
    ax.set_yscale(scales["y"])
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    return _save(fig, path, title, scales, stamp)


def plot_eigenvalues_vs_deficit(rows: List[Dict], path, subcommand: Optional[str] = None,
                                metadata: Sequence[Tuple[str, str]] = ()) -> Path:
    rows = [r for r in rows if r.get("lambda_ann") is not None]
    return _line_figure(Path(path), "Eigenvalues vs deficit", [r["D"] for r in rows],
                        {"lambda_ann": [r["lambda_ann"] for r in rows],
                         "lambda_cyl": [r["lambda_cyl"] for r in rows]},
                        "D", "eigenvalue", stamp=_stamp(subcommand, metadata))


def plot_eigenvalues_vs_radius(rows: List[Dict], path, subcommand: Optional[str] = None,
                               metadata: Sequence[Tuple[str, str]] = ()) -> Path:
    rows = [r for r in rows if r.get("lambda_ann") is not None]
    return _line_figure(Path(path), "Eigenvalues vs outer radius", [r["b"] for r in rows],
                        {"lambda_ann": [r["lambda_ann"] for r in rows],
                         "lambda_cyl": [r["lambda_cyl"] for r in rows]},
                        "b", "eigenvalue", stamp=_stamp(subcommand, metadata))


def plot_small_deficit(rows: List[Dict], path, subcommand: Optional[str] = None,
                       metadata: Sequence[Tuple[str, str]] = ()) -> Path:
    rows = [r for r in rows if r.get("D") and r.get("D_continuum")]
    return _line_figure(Path(path), "Small deficit", [r["epsilon"] for r in rows],
                        {"D (grid)": [r["D"] for r in rows],
                         "D (continuum)": [r["D_continuum"] for r in rows]},
                        "epsilon", "D", stamp=_stamp(subcommand, metadata))


def plot_eigenvalues_vs_epsilon(rows: List[Dict], path, subcommand: Optional[str] = None,
                                metadata: Sequence[Tuple[str, str]] = ()) -> Path:
    rows = [r for r in rows if r.get("lambda_cont") is not None]
    return _line_figure(Path(path), "Eigenvalues and epsilon", [r["epsilon"] for r in rows],
                        {"lambda_cont": [r["lambda_cont"] for r in rows],
                         "lambda_cyl": [r["lambda_cyl"] for r in rows]},
                        "epsilon", "eigenvalue", stamp=_stamp(subcommand, metadata))


def plot_trajectory(rows: List[Dict], path, subcommand: Optional[str] = None,
                    metadata: Sequence[Tuple[str, str]] = ()) -> Path:
    return _line_figure(Path(path), "Annulus under curve shortening flow", [r["t"] for r in rows],
                        {key: [r[key] for r in rows] for key in ("E", "h", "D", "lambda_1")},
                        "t", "value", marker=".", stamp=_stamp(subcommand, metadata))
