import logging
import math
import time
from unittest.mock import patch

import pytest

from engine.norm_service import DEFAULT_CONFIG, NormService, is_extreme_alpha, parse_alphas, validate_config
from engine.src.errors import ConfigError, DomainError, UnboundedRegimeError
from engine.src.norm_formulas import BRACKET, EXACT
from engine.src.report_writer import TABLE_COLUMNS


@pytest.fixture
def service():
    """A service with a coarse sup search so the tests stay quick"""
    return NormService({"sup_radii": 16})


def test_parse_alpha_range_includes_stop():
    alphas = parse_alphas("0.1:0.9:0.1")
    assert len(alphas) == 9
    assert alphas[0] == 0.1
    assert alphas[-1] == 0.9
    assert alphas[2] == 0.3


def test_parse_alpha_list():
    assert parse_alphas(" 0.25, 0.5,") == [0.25, 0.5]


@pytest.mark.parametrize("text", ["1:0:0.1", "0.1:0.9", "0.1:0.9:0", "a,b", "", "0:1:0.00001", "nan"])
def test_parse_alphas_rejects(text):
    with pytest.raises(ConfigError):
        parse_alphas(text)


def test_validate_config_fills_defaults():
    config = validate_config({"tol_rel": "1e-8", "log_level": "debug", "workers": 2.0})
    assert set(config) == set(DEFAULT_CONFIG)
    assert config["tol_rel"] == 1e-8
    assert config["log_level"] == "DEBUG"
    assert config["workers"] == 2
    assert config["seed"] == DEFAULT_CONFIG["seed"]


@pytest.mark.parametrize("override", [
    {"colour": "blue"},
    {"tol_abs": 0},
    {"tol_rel": math.inf},
    {"sup_radii": 1},
    {"workers": 1.5},
    {"workers": "many"},
    {"trials": True},
    {"seed": -1},
    {"format": "xml"},
    {"log_level": "LOUD"},
])
def test_validate_config_rejects(override):
    with pytest.raises(ConfigError):
        validate_config(override)


def test_extreme_alpha():
    assert is_extreme_alpha(0.005)
    assert is_extreme_alpha(0.995)
    assert not is_extreme_alpha(0.5)
    assert not is_extreme_alpha(None)
    assert not is_extreme_alpha(1.5)


def test_extreme_alpha_warning(service, caplog):
    with caplog.at_level(logging.WARNING):
        service._setting("log-korenblum", "korenblum", 0.005)
    assert "close to an end of (0, 1)" in caplog.text


def test_norm_hardy_to_bloch(service):
    report = service.norm("hardy-inf", "bloch")
    assert report["theorem"] == "TH61"
    assert report["kind"] == EXACT
    assert report["value"] == 3.0
    assert report["alpha"] is None
    assert "certificate" not in report


def test_norm_bloch_alpha_bracket(service):
    report = service.norm("bloch-alpha", "bloch-alpha", 1.5)
    assert report["kind"] == BRACKET
    assert report["value"] is None
    assert report["lower"] == pytest.approx(1.5 * math.pi - 1.0, rel=1e-10)
    assert report["upper"] == pytest.approx(2.0 ** 1.5 * math.pi + 2.0)
    assert report["formulas"] == ["TH52_LOWER", "TH53_UPPER"]


def test_norm_korenblum_exact(service):
    report = service.norm("korenblum", "bloch-plus-one", 0.5)
    assert report["value"] == pytest.approx(1.5 * math.pi, abs=1e-8)
    assert report["setting"] == "H^inf_0.5 -> B^1.5"


def test_norm_unbounded_raises(service):
    with pytest.raises(UnboundedRegimeError):
        service.norm("bloch-alpha", "bloch-alpha", 0.5)


def test_bounds_carry_diagnostics(service):
    th61 = service.bounds("hardy-inf", "bloch")
    assert th61["certificate"]["upper"]["value"] == pytest.approx(3.0, abs=1e-8)
    th71 = service.bounds("korenblum", "bloch-plus-one", 0.5)
    assert th71["details"]["premise_margin"] >= -1e-10
    th41 = service.bounds("log-korenblum", "log-korenblum", 0.5)
    assert th41["search"]["limit_value"] == pytest.approx(math.pi)
    assert th41["lower"] <= th41["value"]


def test_evaluate_constant_at_origin(service):
    """H(1)(0) = 1 by all three methods"""
    for method in ("kernel", "composed", "matrix"):
        result = service.evaluate("const", 0, method=method)
        assert result["value"] == pytest.approx(1.0, rel=1e-10)
        assert result["quantity"] == "Hf(z)"
    assert "tail_bound" in service.evaluate("const", 0.5, method="matrix")


def test_evaluate_derivative(service):
    result = service.evaluate("const", 0, derivative_order=1)
    assert result["quantity"] == "(Hf)'(z)"
    assert result["value"] == pytest.approx(0.5, rel=1e-9)


def test_evaluate_complex_point(service):
    result = service.evaluate("monomial:1", 0.5j)
    assert result["z"] == 0.5j
    assert isinstance(result["value"], complex) or hasattr(result["value"], "imag")


@pytest.mark.parametrize("kwargs", [
    {"function": "const", "z": 0.0, "method": "series"},
    {"function": "const", "z": 0.0, "derivative_order": 2},
    {"function": "const", "z": 0.0, "derivative_order": 1, "method": "matrix"},
    {"function": "const", "z": 1.0},
    {"function": "sine", "z": 0.0},
])
def test_evaluate_rejects(service, kwargs):
    with pytest.raises(DomainError):
        service.evaluate(**kwargs)


def test_table_row_inside_unit_interval(service):
    row = service.table_row(0.5)
    assert tuple(row) == TABLE_COLUMNS
    assert row["th61"] == 3.0
    assert row["th41_lower"] == pytest.approx(math.pi)
    assert row["th52_lower"] is None
    assert row["th71_exact_or_upper"] == pytest.approx(1.5 * math.pi, abs=1e-8)
    assert row["verdicts"].startswith("TH31=exact;TH41=exact;TH52=unbounded")


def test_table_row_bloch_range(service):
    row = service.table_row(1.5)
    assert row["th31_norm"] is None
    assert row["th71_lower"] is None
    assert row["th52_lower"] == pytest.approx(1.5 * math.pi - 1.0, rel=1e-10)
    assert "TH52=bracket" in row["verdicts"]


def test_table_keeps_input_order(service):
    """Rows that finish out of order come back in alpha order"""
    def slow_first(alpha):
        time.sleep(0.05 if alpha == 0.1 else 0.0)
        return {"alpha": alpha}

    with patch.object(NormService, "table_row", side_effect=slow_first):
        rows = service.table([0.1, 0.2, 0.3], workers=3)
    assert [row["alpha"] for row in rows] == [0.1, 0.2, 0.3]


@pytest.mark.parametrize("alphas", [[], [0.5, -1.0], [math.nan]])
def test_table_rejects_bad_grid(service, alphas):
    with pytest.raises(DomainError):
        service.table(alphas)


def test_verify_suite_summary(service):
    result = service.verify("special")
    assert result["passed"]
    assert result["failed"] == 0
    assert result["total"] == len(result["checks"])
    assert result["seed"] == DEFAULT_CONFIG["seed"]
    with pytest.raises(DomainError):
        service.verify("nothing")


def test_formulas(service):
    ids = [formula["id"] for formula in service.formulas()]
    assert len(ids) == 13
    assert "TH61_EXACT" in ids
