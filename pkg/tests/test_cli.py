# python -m tests.test_cli
import pytest

from spectra.main import build_parser, main, run
from spectra.reports import QuotedValue, read_csv


def cli(out_dir, *args):
    return run([args[0], "--out-dir", str(out_dir), "--no-log-file", "--workers", "2", *args[1:]])


def test_parser_lists_subcommands():
    help_text = build_parser().format_help()
    for command in ("annulus-table", "cylinder-sweep", "verify", "gap"):
        assert command in help_text


def test_gap_report(out_dir, capsys):
    assert cli(out_dir, "gap", "--b-values", "5,10") == 0
    metadata, rows = read_csv(out_dir / "gap_report.csv")
    assert metadata["subcommand"] == "gap"
    assert metadata["b_values"] == "5.0,10.0"
    assert [row["b"] for row in rows] == ["5.000000", "10.000000"]
    assert all(row["regime"] == "large-deficit regime" for row in rows)
    assert "lambda_cyl" in capsys.readouterr().out


def test_annulus_table_flags_published_typo(out_dir):
    assert cli(out_dir, "annulus-table", "--b-values", "5,1000", "--modes", "--svg") == 0
    _, rows = read_csv(out_dir / "annulus_table.csv")
    first, last = rows
    assert first["status"] == "pass" and first["flags"] == ""
    assert float(first["lambda_ann"]) == pytest.approx(0.58246, rel=2e-3)
    # valor publicado para b = 1000 é ~10x o autovalor verdadeiro
    assert last["status"] == "pass"
    assert "lambda_ann:reference-mismatch" in last["flags"]
    assert float(last["oracle_difference"]) <= 1e-10
    assert (out_dir / "annulus_modes.csv").exists()
    assert (out_dir / "fig_eigenvalues_vs_deficit.svg").exists()


def test_annulus_table_matches_golden(out_dir, golden):
    assert cli(out_dir, "annulus-table", "--b-values", "5,10,20") == 0
    _, rows = read_csv(out_dir / "annulus_table.csv")
    for row, published in zip(rows, golden("annulus_table")):
        for column in ("E", "D", "sqrt_D", "lambda_cyl"):
            quoted = QuotedValue(published[column])
            assert quoted.agrees(float(row[column]), relative=1e-5, absolute=1e-6), column
        assert QuotedValue(published["lambda_ann"]).agrees(float(row["lambda_ann"]), relative=2e-3)


def test_main_exits_with_status(out_dir):
    with pytest.raises(SystemExit) as excinfo:
        main(["gap", "--out-dir", str(out_dir), "--no-log-file", "--b-values", "5"])
    assert excinfo.value.code == 0


def test_cylinder_sweep_small_epsilons(out_dir):
    assert cli(out_dir, "cylinder-sweep", "--epsilons", "0.0001,0.0002") == 0
    _, rows = read_csv(out_dir / "cylinder_sweep.csv")
    assert float(rows[0]["lambda_cont"]) == pytest.approx(9.863675, abs=5e-4)
    assert float(rows[0]["D"]) == pytest.approx(1.623593e-7, rel=1e-5)
    assert "lambda_num:reference-mismatch" in rows[0]["flags"]
    assert rows[1]["flags"] == ""
    _, summary = read_csv(out_dir / "cylinder_sweep_summary.csv")
    values = {row["quantity"]: row["value"] for row in summary}
    assert float(values["deficit_doubling_ratio"]) == pytest.approx(4.0, rel=1e-3)
    assert float(values["deficit_slope"]) == pytest.approx(2.0, abs=1e-2)


def test_verify_short_trajectory(out_dir):
    assert cli(out_dir, "verify", "--t-end", "0.2", "--steps", "2") == 0
    _, rows = read_csv(out_dir / "verify.csv")
    identities = {row["identity"] for row in rows}
    assert {"topping", "energy_variation", "modulus_rate", "hadamard_csf",
            "topping_order", "hadamard_order"} <= identities
    assert all(row["passed"] == "true" for row in rows)
    _, trajectory = read_csv(out_dir / "csf_trajectory.csv")
    assert len(trajectory) == 3
    assert all(row["modulus_increasing"] == "true" for row in trajectory)


def test_verify_frozen_motion_skips_order_row(out_dir):
    assert cli(out_dir, "verify", "--t-end", "0.1", "--steps", "1", "--motion", "frozen", "--no-csv") == 0
    assert not (out_dir / "verify.csv").exists()


@pytest.mark.parametrize("args", [
    ("gap", "--precision", "0"),
    ("gap", "--b-values", "0.5"),
    ("verify", "--t-end", "0.6"),
    ("cylinder-sweep", "--n-x", "2"),
    ("verify", "--a0", "5", "--b0", "2"),
])
def test_configuration_errors_exit_2(out_dir, args):
    assert cli(out_dir, *args) == 2


def test_unknown_subcommand_exit_2():
    assert run(["spiral"]) == 2


def test_config_file_reproduces_run(out_dir, tmp_path):
    assert cli(out_dir, "gap", "--b-values", "20", "--precision", "8") == 0
    rerun_dir = tmp_path / "rerun"
    assert cli(rerun_dir, "gap", "--config", str(out_dir / "gap_report.csv")) == 0
    first = (out_dir / "gap_report.csv").read_text(encoding="utf-8")
    second = (rerun_dir / "gap_report.csv").read_text(encoding="utf-8")
    # só o diretório de saída difere
    assert first.replace(str(out_dir), "") == second.replace(str(rerun_dir), "")


if __name__ == "__main__":
    pytest.main(["-v", __file__])
