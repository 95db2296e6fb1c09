import os
import pathlib

import pytest

import accval

DATA = pathlib.Path(os.environ.get("ACCVAL_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def test_fixture_models_agree():
    series = accval.ms_flow_series()
    assumptions = accval.ms_assumptions()
    values = [accval.value(m, series, assumptions).entity_value for m in ("fcfvm", "revm", "aegm")]
    assert max(values) - min(values) <= 1.0
    assert all(6790 <= v <= 6800 for v in values)


def test_from_files():
    assumptions = accval.parse_assumptions((DATA / "ms_assumptions.txt").read_text())
    series = accval.project_flows((DATA / "ms_statements.csv").read_text(), assumptions)
    result = accval.value("revm", series, assumptions)
    assert series.horizon == 5
    assert len(result.schedule) == 5
    assert 3.06 <= result.per_share <= 3.09


def test_errors_map_to_python_exceptions():
    with pytest.raises(accval.DomainError, match="diverges"):
        accval.continuing_value(100.0, 0.07, 0.07)
    with pytest.raises(ValueError):
        accval.parse_assumptions("wacc=0.07\n")


def test_sensitivity_and_multiples():
    baseline, cells, monotone = accval.sensitivity(
        accval.ms_flow_series(), accval.ms_assumptions(), [0.06, 0.07, 0.08], [0.01, 0.02, 0.03]
    )
    assert monotone
    assert len(cells) == 6
    assert cells[1]["entity_value"] == pytest.approx(baseline)
    assert accval.central_multiple([10.6, 11.0], "median") == pytest.approx(10.8)


def test_benford_and_lim():
    assert accval.benford_pmf(1) == pytest.approx(0.30103, abs=1e-5)
    assert accval.benford_screen([1, 2, 3])["verdict"] == "insufficient-sample"
    assert accval.ohlson_value(100.0, 10.0, 0.0, 0.0, 0.5, 1.1) == 100.0


def test_cli_and_reconcile():
    code, out, err = accval.run_cli(["reconcile", "--format", "csv"])
    assert code == 0 and err == ""
    rows = accval.reconcile()
    assert {r["table"] for r in rows} >= {"Table 1", "Table 2", "Table 3"}
    code, _, err = accval.run_cli(["value", "--bogus"])
    assert code == 1
