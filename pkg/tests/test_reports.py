# python -m tests.test_reports
import math

import pytest

from spectra.errors import DomainError
from spectra.models import CsfSnapshot, CsfTrajectory, IdentityResidualReport, SpectralReport
from spectra.reports import ANNULUS_TABLE, CYLINDER_TABLE, QuotedValue, format_number, lookup, read_csv, write_csv
from spectra.reports import plots


def test_format_number():
    assert format_number(1.95198, 6) == "1.951980"
    assert format_number(1.623593e-7, 6) == "1.623593e-07"
    assert format_number(0.0, 3) == "0.000"
    assert format_number(7, 6) == "7"
    assert format_number(True) == "true"
    assert format_number(None) == ""
    assert format_number(float("nan")) == "nan"
    assert format_number(float("-inf")) == "-inf"
    assert format_number("large-deficit regime") == "large-deficit regime"


def test_csv_metadata_and_rows(tmp_path):
    path = write_csv(tmp_path / "sub" / "table.csv", ["b", "E", "status"],
                     [{"b": 5.0, "E": 1.9519800, "status": "pass"}, {"b": 10.0, "status": "error"}],
                     "annulus-table", [("a", "1.0"), ("precision", "6")], precision=6)
    metadata, rows = read_csv(path)
    assert metadata["subcommand"] == "annulus-table"
    assert metadata["a"] == "1.0"
    assert "spectra_version" in metadata
    assert rows[0] == {"b": "5.000000", "E": "1.951980", "status": "pass"}
    assert rows[1]["E"] == ""


def test_csv_is_reproducible(tmp_path):
    args = (["x"], [{"x": 0.5}], "gap", [("a", "1.0")])
    first = write_csv(tmp_path / "one.csv", *args).read_bytes()
    second = write_csv(tmp_path / "two.csv", *args).read_bytes()
    assert first == second


def test_quoted_value_half_unit():
    assert QuotedValue("0.00006").half_unit == pytest.approx(5e-6)
    assert QuotedValue("1.623593e-7").half_unit == pytest.approx(5e-14)
    assert QuotedValue("150.42198").half_unit == pytest.approx(5e-6)
    assert QuotedValue("2786").half_unit == 0.5


def test_quoted_value_band():
    quoted = QuotedValue("0.58246")
    assert quoted.band(relative=2e-3) == pytest.approx(2e-3 * 0.58246)
    assert quoted.agrees(0.5830, relative=2e-3)
    assert not quoted.agrees(0.5850, relative=2e-3)
    assert not quoted.agrees(float("nan"), relative=1.0)


def test_reference_tables_are_consistent():
    """√D citado concorda com a raiz do D citado"""
    for b, row in ANNULUS_TABLE.items():
        assert math.sqrt(row["D"].value) == pytest.approx(row["sqrt_D"].value, abs=1e-5)
        assert (math.pi ** 2 / math.log(b)) ** 2 * 4 == pytest.approx(row["lambda_cyl"].value, rel=1e-5)
    for row in CYLINDER_TABLE.values():
        assert row["lambda_cyl"].value == pytest.approx(math.pi ** 2, abs=1e-6)


def test_reference_tables_match_golden_files(golden):
    for row in golden("annulus_table"):
        quoted = lookup(ANNULUS_TABLE, float(row.pop("b")))
        assert {key: value.text for key, value in quoted.items()} == row
    for row in golden("cylinder_sweep"):
        quoted = lookup(CYLINDER_TABLE, float(row.pop("epsilon")))
        assert {key: value.text for key, value in quoted.items()} == row


def test_lookup_tolerates_float_keys():
    assert lookup(ANNULUS_TABLE, 5) is ANNULUS_TABLE[5.0]
    assert lookup(CYLINDER_TABLE, 1e-4) is CYLINDER_TABLE[0.0001]
    assert lookup(ANNULUS_TABLE, 7.0) is None


def test_identity_report_residuals():
    report = IdentityResidualReport("topping", left=-1.0, right=-1.0 - 1e-8, band=1e-6)
    assert report.absolute_residual == pytest.approx(1e-8)
    assert report.relative_residual == pytest.approx(1e-8 / (1.0 + 1e-8))
    assert report.passed
    assert IdentityResidualReport("x", left=0.0, right=0.0).relative_residual == 0.0
    assert not IdentityResidualReport("x", left=1.0, right=2.0, band=0.1).passed
    assert IdentityResidualReport("x", left=1.0, right=2.0).passed


def test_spectral_report_dict():
    report = SpectralReport(a=1.0, b=5.0, eigenvalue=0.58, lambda_cyl=150.4, energy=1.95, modulus=0.256,
                            deficit=1.16, epsilon0=0.01)
    row = report.to_dict()
    assert row["gap"] == pytest.approx(0.58 - 150.4)
    assert row["sqrt_D"] == pytest.approx(math.sqrt(1.16))
    assert row["regime"] == "large-deficit regime"


def test_trajectory_validation():
    snap = CsfSnapshot(time=0.0, a=1.0, b=5.0, energy=1.9, modulus=0.25, deficit=1.1, eigenvalue=0.58)
    with pytest.raises(DomainError):
        CsfTrajectory(1.0, 5.0, ())
    with pytest.raises(DomainError):
        CsfTrajectory(1.0, 5.0, (snap, snap))


def test_axis_scale():
    assert plots.axis_scale([1e-4, 1e-2]) == "log"
    assert plots.axis_scale([1.0, 2.0]) == "linear"
    assert plots.axis_scale([-1.0, 100.0]) == "linear"


def test_svg_figure_is_reproducible(tmp_path):
    rows = [{"epsilon": e, "D": 16.2 * e * e, "D_continuum": 17.0 * e * e} for e in (1e-4, 1e-3, 5e-3)]
    first = plots.plot_small_deficit(rows, tmp_path / "a.svg")
    second = plots.plot_small_deficit(rows, tmp_path / "b.svg")
    text = first.read_text(encoding="utf-8")
    assert "<svg" in text
    assert "x: log" in text
    assert first.read_bytes() == second.read_bytes()


def test_svg_embeds_run_metadata(tmp_path):
    from spectra import __version__
    from spectra.utils.config_manager import RunConfig

    run = RunConfig.from_sources("verify", overrides={"t_end": "0.25"})
    rows = [{"t": t, "E": 1.0 + t, "h": 0.5, "D": 0.1, "lambda_1": 3.0 - t} for t in (0.0, 0.1, 0.25)]
    path = plots.plot_trajectory(rows, tmp_path / "traj.svg", run.subcommand, run.to_metadata())
    text = path.read_text(encoding="utf-8")
    description = text.split("<dc:description>")[1].split("</dc:description>")[0]
    pairs = dict(line.split(" = ", 1) for line in description.splitlines()[1:])
    assert pairs.pop("spectra_version") == __version__
    assert pairs.pop("subcommand") == "verify"
    assert pairs == dict(run.to_metadata())
    assert pairs["t_end"] == "0.25"


if __name__ == "__main__":
    pytest.main(["-v", __file__])
