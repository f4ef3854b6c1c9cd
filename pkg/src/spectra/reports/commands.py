# src/spectra/reports/commands.py
"""
Subcomandos da CLI: reprodução das duas tabelas de referência, verificação
das identidades ao longo do CSF e relatório de lacuna espectral.

Cada comando recebe um `RunConfig`, calcula as linhas num pool de threads,
monta a saída em ordem e devolve o código de saída:
0 = bandas ok, 1 = falha de banda numérica, 3 = falha de solver.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from tabulate import tabulate

from spectra.annulus import (
    AnnulusGeometry,
    annulus_spectrum,
    capacity_profile,
    dirichlet_residuals,
    mode_norm_squared,
    mode_table,
    radial_ode_residual,
)
from spectra.cylinder import (
    ConformalPerturbation,
    CylinderGrid,
    SineCosineProfile,
    continuum_deficit,
    cylinder_deficit,
    cylinder_eigenvalue_exact,
    cylinder_spectrum,
    first_order_shift,
    perturbed_eigenvalues,
    small_deficit_closed_form,
)
from spectra.errors import BracketError, SpectraError
from spectra.flow import (
    BoundaryMotion,
    convergence_order,
    evolve_csf,
    gap_report,
    verify_energy_variation,
    verify_hadamard,
    verify_modulus_rate,
    verify_topping,
)
from spectra.models import IdentityResidualReport
from spectra.reports import plots
from spectra.reports.csv_writer import write_csv
from spectra.reports.reference import (
    ANNULUS_TABLE,
    CLOSED_FORM_BAND,
    CYLINDER_TABLE,
    DEFICIT_BAND,
    LAMBDA_ANN_BAND,
    LAMBDA_CONT_BAND,
    LAMBDA_CYL_BAND,
    ORACLE_BAND,
    SLOPE_BAND,
    SQRT_D_ABSOLUTE_BAND,
    lookup,
)
from spectra.special import MIN_Y_ARGUMENT, bisect_root, cross_product
from spectra.utils.config_manager import RunConfig

logger = logging.getLogger("ReportCommands")

EXIT_OK = 0
EXIT_BAND = 1
EXIT_SOLVER = 3

ORDER_STEPS = (1e-2, 5e-3, 2.5e-3)


def _pool_map(func: Callable, items: Sequence, workers: int) -> List:
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        return list(executor.map(func, items))


def _guard(func: Callable, key_name: str) -> Callable:
    """Converte falha de uma linha em linha de erro; as demais seguem."""
    def wrapper(key):
        try:
            return func(key)
        except SpectraError as e:
            logger.error(f"Linha {key_name}={key} falhou: {e}")
            return {key_name: key, "status": "error", "error": str(e), "exit_code": e.exit_code}
    return wrapper


def _exit_code(rows: List[Dict], band_failed: bool = False) -> int:
    errors = [row.get("exit_code", EXIT_SOLVER) for row in rows if row.get("status") == "error"]
    if errors:
        return max(errors)
    if band_failed or any(row.get("status") == "fail" for row in rows):
        return EXIT_BAND
    return EXIT_OK


def _print_table(rows: List[Dict], columns: Sequence[str], precision: int):
    table = [[row.get(c) for c in columns] for row in rows]
    print(tabulate(table, headers=list(columns), floatfmt=f".{precision}g", missingval=""))


def _check(row: Dict, label: str, ok: bool, fatal: bool):
    if ok:
        return
    row["flags"] = ";".join(filter(None, [row.get("flags"), f"{label}:{'fail' if fatal else 'reference-mismatch'}"]))
    if fatal:
        row["status"] = "fail"


# -- annulus-table -------------------------------------------------------------

ANNULUS_COLUMNS = ["b", "E", "D", "sqrt_D", "lambda_ann", "lambda_cyl",
                   "gap", "h", "mode_n", "mode_s", "lambda_oracle", "oracle_difference",
                   "ode_residual", "dirichlet_residual", "norm_defect", "status", "flags", "error"]


def _first_root_oracle(n: int, a: float, b: float, k_upper: float, samples: int = 4000) -> float:
    """Primeira raiz de F_n em (0, k_upper] por malha geométrica e bissecção pura."""
    ks = np.geomspace(max(0.5 / b, MIN_Y_ARGUMENT / a), k_upper, samples)
    values = cross_product(n, ks, a, b)
    changes = np.flatnonzero(np.sign(values[:-1]) != np.sign(values[1:]))
    if changes.size == 0:
        raise BracketError(f"Oráculo sem mudança de sinal de F_{n} até k = {k_upper:.6g}",
                           scan_range=(float(ks[0]), k_upper))
    first = int(changes[0])
    return bisect_root(n, a, b, float(ks[first]), float(ks[first + 1]))


def annulus_row(a: float, b: float, n_max: int = 5, s_max: int = 2) -> Dict:
    """Uma linha da tabela do anel, com diagnósticos e comparação com a tabela publicada."""
    geom = AnnulusGeometry(a, b)
    profile = capacity_profile(geom)
    modes = annulus_spectrum(geom, n_max, s_max)
    ground = modes[0]

    oracle_k = _first_root_oracle(ground.n, a, b, ground.k + min(math.pi / (b - a), 0.1) / 4.0)
    lambda_oracle = oracle_k ** 2

    samples = np.linspace(a, b, 12)[1:-1]
    ode = max(float(np.max(np.abs(radial_ode_residual(m, samples)))) for m in modes)
    dirichlet = max(max(dirichlet_residuals(m, geom)) for m in modes)
    norm_defect = abs(mode_norm_squared(ground, geom, panels=128) - mode_norm_squared(ground, geom, panels=64))

    row = {
        "b": b, "E": profile.energy, "D": profile.deficit, "sqrt_D": profile.sqrt_deficit,
        "lambda_ann": ground.eigenvalue, "lambda_cyl": cylinder_eigenvalue_exact(profile.modulus, 1, 0),
        "h": profile.modulus, "mode_n": ground.n, "mode_s": ground.s,
        "lambda_oracle": lambda_oracle, "oracle_difference": abs(ground.eigenvalue - lambda_oracle),
        "ode_residual": ode, "dirichlet_residual": dirichlet, "norm_defect": norm_defect,
        "status": "pass", "flags": "",
    }
    row["gap"] = row["lambda_ann"] - row["lambda_cyl"]

    _check(row, "oracle", row["oracle_difference"] <= ORACLE_BAND * max(1.0, lambda_oracle), fatal=True)
    _check(row, "dirichlet", dirichlet <= 1e-10, fatal=True)

    reference = lookup(ANNULUS_TABLE, b) if a == 1.0 else None
    if reference:
        for column in ("E", "D", "sqrt_D"):
            _check(row, column, reference[column].agrees(row[column], relative=CLOSED_FORM_BAND), fatal=True)
        _check(row, "lambda_cyl", reference["lambda_cyl"].agrees(row["lambda_cyl"], relative=LAMBDA_CYL_BAND),
               fatal=True)
        # o oráculo prevalece sobre o valor publicado
        _check(row, "lambda_ann", reference["lambda_ann"].agrees(row["lambda_ann"], relative=LAMBDA_ANN_BAND),
               fatal=False)
    if row["flags"]:
        logger.warning(f"Anel (1, {b}): {row['flags']}")
    return row


def cmd_annulus_table(run: RunConfig) -> int:
    """Tabela do anel: E, D, √D, λ_ann, λ_cyl por raio externo, mais diagnósticos."""
    a, precision, out_dir = run["a"], run["precision"], Path(run["out_dir"])
    rows = _pool_map(_guard(lambda b: annulus_row(a, b, run["n_max"], run["s_max"]), "b"),
                     run["b_values"], run["workers"])

    if run["csv"]:
        write_csv(out_dir / "annulus_table.csv", ANNULUS_COLUMNS, rows, run.subcommand, run.to_metadata(), precision)
    if run["modes"]:
        mode_rows = []
        for b in run["b_values"]:
            try:
                for entry in mode_table(AnnulusGeometry(a, b), run["n_max"], run["s_max"]):
                    mode_rows.append({"b": b, "index": entry.index, "eigenvalue": entry.eigenvalue,
                                      "n": entry.n, "s": entry.s, "multiplicity": entry.multiplicity})
            except SpectraError as e:
                logger.error(f"Tabela de modos para b={b} falhou: {e}")
        write_csv(out_dir / "annulus_modes.csv", ["b", "index", "eigenvalue", "n", "s", "multiplicity"],
                  mode_rows, run.subcommand, run.to_metadata(), precision)
    good = [r for r in rows if r.get("status") != "error"]
    if run["svg"] and good:
        plots.plot_eigenvalues_vs_deficit(good, out_dir / "fig_eigenvalues_vs_deficit.svg",
                                          run.subcommand, run.to_metadata())
        plots.plot_eigenvalues_vs_radius(good, out_dir / "fig_eigenvalues_vs_radius.svg",
                                         run.subcommand, run.to_metadata())

    _print_table(rows, ANNULUS_COLUMNS[:6] + ["status", "flags"], precision)
    return _exit_code(rows)


# -- cylinder-sweep ------------------------------------------------------------

CYLINDER_COLUMNS = ["epsilon", "lambda_num", "lambda_cont", "lambda_cyl", "lambda_cont_minus_cyl", "D", "sqrt_D",
                    "D_continuum", "D_small_closed_form", "first_order_shift", "shift", "shift_over_sqrt_D",
                    "residual", "status", "flags", "error"]


def _log_log_slope(x: Sequence[float], y: Sequence[float]) -> Optional[float]:
    pairs = [(u, v) for u, v in zip(x, y) if u and v and u > 0 and v > 0]
    if len(pairs) < 2:
        return None
    xs, ys = np.log([p[0] for p in pairs]), np.log([p[1] for p in pairs])
    return float(np.polyfit(xs, ys, 1)[0])


def cylinder_row(grid: CylinderGrid, profile: SineCosineProfile, epsilon: float, baseline,
                 count: int = 1, tol: float = 1e-10, seed: int = 20240517) -> Dict:
    """Uma linha da varredura em ε no cilindro."""
    pert = ConformalPerturbation(epsilon, profile)
    results = perturbed_eigenvalues(grid, pert, count=count, tol=tol, seed=seed)
    ground = results[0]
    deficit = cylinder_deficit(grid, pert)
    lambda_cyl = cylinder_eigenvalue_exact(grid.h, 1, 0)
    shift = ground.lambda_cont - baseline.lambda_cont

    row = {
        "epsilon": epsilon, "lambda_num": ground.iota, "lambda_cont": ground.lambda_cont,
        "lambda_cyl": lambda_cyl, "lambda_cont_minus_cyl": ground.lambda_cont - lambda_cyl,
        "D": deficit, "sqrt_D": math.sqrt(deficit),
        "D_continuum": continuum_deficit(grid.h, pert),
        "D_small_closed_form": small_deficit_closed_form(grid.h, pert),
        "first_order_shift": first_order_shift(grid, pert, unperturbed=baseline),
        "shift": shift, "shift_over_sqrt_D": shift / math.sqrt(deficit) if deficit > 0 else None,
        "residual": ground.residual, "status": "pass", "flags": "",
    }
    exact = cylinder_spectrum(grid.h, count)
    for j, result in enumerate(results[1:], start=2):
        row[f"lambda_cont_{j}"] = result.lambda_cont
        row[f"lambda_exact_{j}"] = exact[j - 1]

    _check(row, "residual", ground.residual <= tol * max(1.0, ground.iota), fatal=True)
    reference = lookup(CYLINDER_TABLE, epsilon) if (grid.h == 1.0 and profile.k == 1) else None
    if reference:
        _check(row, "lambda_cont", reference["lambda_cont"].agrees(row["lambda_cont"], absolute=LAMBDA_CONT_BAND),
               fatal=True)
        _check(row, "D", reference["D"].agrees(deficit, relative=DEFICIT_BAND), fatal=True)
        _check(row, "lambda_num", reference["lambda_num"].agrees(ground.iota, absolute=LAMBDA_CONT_BAND / grid.cell_area),
               fatal=False)
        _check(row, "sqrt_D", reference["sqrt_D"].agrees(row["sqrt_D"], relative=DEFICIT_BAND / 2), fatal=False)
    if row["flags"]:
        logger.warning(f"ε={epsilon:g}: {row['flags']}")
    return row


def sweep_summary(rows: List[Dict]) -> Dict:
    """Inclinações log-log e razão D(2ε)/D(ε) quando o par 1e-4/2e-4 está presente."""
    good = [r for r in rows if r.get("status") != "error" and r["epsilon"] > 0]
    summary = {
        "deficit_slope": _log_log_slope([r["epsilon"] for r in good], [r["D"] for r in good]),
        "shift_vs_sqrt_deficit_slope": _log_log_slope([r["sqrt_D"] for r in good], [abs(r["shift"]) for r in good]),
        "deficit_doubling_ratio": None,
    }
    by_eps = {r["epsilon"]: r for r in good}
    first, second = by_eps.get(1e-4), by_eps.get(2e-4)
    if first and second:
        summary["deficit_doubling_ratio"] = second["D"] / first["D"]
    return summary


def cmd_cylinder_sweep(run: RunConfig) -> int:
    """Varredura em ε: λ_num, λ_cont, λ_cyl, D, √D e os diagnósticos de pequeno déficit."""
    precision, out_dir = run["precision"], Path(run["out_dir"])
    grid = CylinderGrid(run["h"], run["n_x"], run["n_theta"])
    profile = SineCosineProfile(h=run["h"], k=run["profile_k"])
    logger.info(f"Grade {grid.n_x}x{grid.n_theta}, h={grid.h:g}, perfil {profile.describe()}")

    try:
        baseline = perturbed_eigenvalues(grid, ConformalPerturbation(0.0, profile), count=1,
                                         tol=run["eigen_tol"], seed=run["seed"])[0]
    except SpectraError as e:
        logger.error(f"Solve sem perturbação falhou: {e}")
        return e.exit_code

    rows = _pool_map(
        _guard(lambda eps: cylinder_row(grid, profile, eps, baseline, run["eigen_count"], run["eigen_tol"],
                                        run["seed"]), "epsilon"),
        run["epsilons"], run["workers"])

    summary = sweep_summary(rows)
    band_failed = False
    slope = summary["deficit_slope"]
    if slope is not None and abs(slope - 2.0) > SLOPE_BAND:
        logger.warning(f"Inclinação log-log de D em ε = {slope:.4f} fora de 2 ± {SLOPE_BAND}")
        band_failed = True
    ratio = summary["deficit_doubling_ratio"]
    if ratio is not None and abs(ratio / 4.0 - 1.0) > 1e-3:
        logger.warning(f"D(2ε)/D(ε) = {ratio:.6f} fora de 4 ± 1e-3 relativo")
        band_failed = True

    columns = list(CYLINDER_COLUMNS)
    for j in range(2, run["eigen_count"] + 1):
        columns[-3:-3] = [f"lambda_cont_{j}", f"lambda_exact_{j}"]
    if run["csv"]:
        write_csv(out_dir / "cylinder_sweep.csv", columns, rows, run.subcommand, run.to_metadata(), precision)
        write_csv(out_dir / "cylinder_sweep_summary.csv", ["quantity", "value"],
                  [{"quantity": k, "value": v} for k, v in summary.items()]
                  + [{"quantity": "lambda_cont_unperturbed", "value": baseline.lambda_cont},
                     {"quantity": "grid", "value": f"{grid.n_x}x{grid.n_theta}"}],
                  run.subcommand, run.to_metadata(), precision)
    good = [r for r in rows if r.get("status") != "error"]
    if run["svg"] and good:
        plots.plot_small_deficit(good, out_dir / "fig_small_deficit.svg",
                                 run.subcommand, run.to_metadata())
        plots.plot_eigenvalues_vs_epsilon(good, out_dir / "fig_eigenvalues_vs_epsilon.svg",
                                          run.subcommand, run.to_metadata())

    _print_table(rows, CYLINDER_COLUMNS[:7] + ["status", "flags"], precision)
    print(tabulate([[k, v] for k, v in summary.items()], headers=["quantity", "value"], missingval="-"))
    return _exit_code(rows, band_failed)


# -- verify --------------------------------------------------------------------

VERIFY_COLUMNS = ["identity", "time", "a", "b", "left", "right", "absolute_residual", "relative_residual",
                  "step", "band", "passed"]
TRAJECTORY_COLUMNS = ["t", "a", "b", "E", "h", "D", "lambda_1", "dh_dt", "dE_dt",
                      "modulus_increasing", "energy_decreasing", "deficit_increasing"]


def _order_report(name: str, evaluate: Callable[[float], IdentityResidualReport]) -> IdentityResidualReport:
    errors = [evaluate(step).absolute_residual for step in ORDER_STEPS]
    orders = convergence_order(ORDER_STEPS, errors)
    return IdentityResidualReport(f"{name}_order", left=float(np.mean(orders)), right=2.0,
                                  step=ORDER_STEPS[-1], band=0.05)


def cmd_verify(run: RunConfig) -> int:
    """Resíduos de Topping, Hadamard, variação de energia e taxa do módulo ao longo do CSF."""
    a0, b0, fd_step, richardson = run["a0"], run["b0"], run["fd_step"], run["richardson"]
    precision, out_dir = run["precision"], Path(run["out_dir"])
    motion = BoundaryMotion(run["motion"])

    trajectory = evolve_csf(a0, b0, run["t_end"], run["steps"], workers=run["workers"])

    def reports_at(t: float) -> List[IdentityResidualReport]:
        return [
            verify_topping(a0, b0, t, fd_step, richardson=richardson),
            verify_energy_variation(a0, b0, t),
            verify_modulus_rate(a0, b0, t, fd_step),
            verify_hadamard(a0, b0, t, fd_step, motion=motion, richardson=richardson),
        ]

    reports = [report for group in _pool_map(reports_at, trajectory.times, run["workers"]) for report in group]
    reports.append(_order_report("topping", lambda step: verify_topping(a0, b0, 0.0, step)))
    if motion.kind != "frozen":
        reports.append(_order_report("hadamard", lambda step: verify_hadamard(a0, b0, 0.0, step, motion=motion)))

    trajectory_rows = trajectory.to_rows()
    modulus_bad = set(trajectory.modulus_violations())
    energy_bad = set(trajectory.energy_violations())
    deficit_bad = set(trajectory.deficit_violations())
    for index, row in enumerate(trajectory_rows):
        row["modulus_increasing"] = row["dh_dt"] > 0 and index not in modulus_bad
        row["energy_decreasing"] = row["dE_dt"] < 0 and index not in energy_bad
        row["deficit_increasing"] = index not in deficit_bad

    if run["csv"]:
        write_csv(out_dir / "verify.csv", VERIFY_COLUMNS, [r.to_dict() for r in reports], run.subcommand,
                  run.to_metadata(), precision)
        write_csv(out_dir / "csf_trajectory.csv", TRAJECTORY_COLUMNS, trajectory_rows, run.subcommand,
                  run.to_metadata(), precision)
    if run["svg"]:
        plots.plot_trajectory(trajectory_rows, out_dir / "fig_csf_trajectory.svg",
                              run.subcommand, run.to_metadata())

    _print_table([r.to_dict() for r in reports], ["identity", "time", "left", "right", "relative_residual", "passed"],
                 precision)
    failed = [r for r in reports if not r.passed]
    monotone_failed = any(not (r["modulus_increasing"] and r["energy_decreasing"]) for r in trajectory_rows)
    for report in failed:
        logger.warning(f"{report.identity} em t={report.time:g}: resíduo {report.relative_residual:.3e} > {report.band}")
    if deficit_bad:
        logger.warning(f"D(t) não cresce nas amostras {sorted(deficit_bad)}")
    return EXIT_BAND if failed or monotone_failed else EXIT_OK


# -- gap -----------------------------------------------------------------------

GAP_COLUMNS = ["a", "b", "E", "D", "sqrt_D", "lambda_ann", "lambda_cyl", "h", "gap", "regime",
               "mode_n", "mode_s", "boundary_integral", "weight_sup", "sqrt_E", "status", "flags", "error"]


def gap_row(a: float, b: float, epsilon0: float) -> Dict:
    row = gap_report(AnnulusGeometry(a, b), epsilon0=epsilon0).to_dict()
    row.update(status="pass", flags="")
    reference = lookup(ANNULUS_TABLE, b) if a == 1.0 else None
    if reference:
        _check(row, "sqrt_D", reference["sqrt_D"].agrees(row["sqrt_D"], absolute=SQRT_D_ABSOLUTE_BAND), fatal=True)
    return row


def cmd_gap(run: RunConfig) -> int:
    """Lacuna λ(A) - λ_cyl(h) por geometria, com a classificação do regime de déficit."""
    a, precision, out_dir = run["a"], run["precision"], Path(run["out_dir"])
    rows = _pool_map(_guard(lambda b: gap_row(a, b, run["epsilon0"]), "b"), run["b_values"], run["workers"])
    for row in rows:
        row.setdefault("a", a)
    if run["csv"]:
        write_csv(out_dir / "gap_report.csv", GAP_COLUMNS, rows, run.subcommand, run.to_metadata(), precision)
    good = [r for r in rows if r.get("status") != "error"]
    if run["svg"] and good:
        plots.plot_eigenvalues_vs_deficit(good, out_dir / "fig_gap_vs_deficit.svg",
                                          run.subcommand, run.to_metadata())
    _print_table(rows, ["b", "lambda_ann", "lambda_cyl", "gap", "sqrt_D", "regime", "status"], precision)
    return _exit_code(rows)


COMMANDS = {
    "annulus-table": cmd_annulus_table,
    "cylinder-sweep": cmd_cylinder_sweep,
    "verify": cmd_verify,
    "gap": cmd_gap,
}
