import json
import logging
import os
import shutil
import tempfile
from unittest.mock import patch

import pytest

import main
from engine import engine_api
from engine.norm_service import DEFAULT_CONFIG
from engine.src.errors import ConfigError, ConvergenceError
from engine.src.report_writer import TABLE_COLUMNS


@pytest.fixture
def temp_config():
    """Create a temporary directory and point the default config path into it"""
    temp_dir = tempfile.mkdtemp()
    config_path = os.path.join(temp_dir, "config.json")
    with patch("main.default_config_path", return_value=config_path):
        yield temp_dir, config_path
    shutil.rmtree(temp_dir)


@pytest.fixture(autouse=True)
def restore_logging():
    """run() reconfigures the root logger; put it back afterwards"""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def test_load_config_no_file(temp_config):
    """Test loading config when no file exists"""
    temp_dir, config_path = temp_config

    config = main.load_config()

    assert config == DEFAULT_CONFIG
    assert os.path.exists(config_path)
    with open(config_path, "r") as f:
        saved_config = json.load(f)
    assert saved_config["seed"] == DEFAULT_CONFIG["seed"]
    assert saved_config["tol_rel"] == DEFAULT_CONFIG["tol_rel"]


def test_load_config_existing_file(temp_config):
    """Test loading a partial config file"""
    temp_dir, config_path = temp_config
    with open(config_path, "w") as f:
        json.dump({"seed": 5, "workers": 2, "format": "csv"}, f)

    config = main.load_config()

    assert config["seed"] == 5
    assert config["workers"] == 2
    assert config["format"] == "csv"
    assert config["trials"] == DEFAULT_CONFIG["trials"]


def test_load_config_error(temp_config):
    """An unreadable default config falls back to the defaults"""
    temp_dir, config_path = temp_config
    with open(config_path, "w") as f:
        f.write("This is not valid JSON")

    config = main.load_config()

    assert config == DEFAULT_CONFIG


def test_load_config_explicit_path(temp_config):
    """An explicit config file must exist and hold an object"""
    temp_dir, _ = temp_config
    with pytest.raises(ConfigError):
        main.load_config(os.path.join(temp_dir, "missing.json"))
    listed = os.path.join(temp_dir, "list.json")
    with open(listed, "w") as f:
        json.dump([1, 2], f)
    with pytest.raises(ConfigError):
        main.load_config(listed)


def test_parser_rejects_unknown_space():
    with pytest.raises(SystemExit):
        main.build_parser().parse_args(["norm", "--from", "hardy-2", "--to", "bloch"])


def test_resolve_run_config_overrides(temp_config):
    """--tol sets both tolerances, --verbose switches to debug logging"""
    args = main.build_parser().parse_args(
        ["norm", "--from", "log-korenblum", "--to", "korenblum", "--alpha", "0.5",
         "--tol", "1e-9", "--seed", "11", "--format", "json", "--verbose"])

    run_config = main.resolve_run_config(args)

    assert run_config.command == "norm"
    assert run_config.settings["tol_abs"] == 1e-9
    assert run_config.settings["tol_rel"] == 1e-9
    assert run_config.settings["seed"] == 11
    assert run_config.settings["log_level"] == "DEBUG"
    assert run_config.fmt == "json"
    assert run_config.options == {"from_space": "log-korenblum", "to_space": "korenblum", "alpha": 0.5}


def test_run_eval(temp_config, capsys):
    """H(1)(0) = 1"""
    code = main.run(["eval", "--function", "const", "--z", "0", "--format", "json"])

    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["value"] == pytest.approx(1.0)
    assert report["quantity"] == "Hf(z)"


def test_run_eval_bad_point(temp_config):
    assert main.run(["eval", "--function", "const", "--z", "abc"]) == 2


def test_run_norm_text(temp_config, capsys):
    code = main.run(["norm", "--from", "hardy-inf", "--to", "bloch"])

    assert code == 0
    out = capsys.readouterr().out
    assert "theorem: TH61" in out
    assert "value: 3" in out


def test_run_unbounded_setting(temp_config, capsys):
    """An unbounded setting exits with 3 and names its regime"""
    code = main.run(["norm", "--from", "bloch-alpha", "--to", "bloch-alpha", "--alpha", "0.5"])

    assert code == 3
    assert "[regime: Bloch_alpha_le1]" in capsys.readouterr().err


def test_run_domain_error(temp_config):
    assert main.run(["norm", "--from", "log-korenblum", "--to", "korenblum", "--alpha", "1.5"]) == 2


def test_run_missing_config_file(temp_config):
    temp_dir, _ = temp_config
    code = main.run(["norm", "--from", "hardy-inf", "--to", "bloch",
                     "--config", os.path.join(temp_dir, "nope.json")])
    assert code == 2


@patch("main.NormService")
def test_run_numerical_failure(mock_service_class, temp_config):
    mock_service_class.return_value.norm.side_effect = ConvergenceError("budget exhausted")

    code = main.run(["norm", "--from", "hardy-inf", "--to", "bloch"])

    assert code == 4


@patch("main.NormService")
def test_run_verify_failure(mock_service_class, temp_config, capsys):
    """A failed check gives exit code 1 and a summary line"""
    mock_service_class.return_value.verify.return_value = {
        "suite": "special", "seed": 1, "passed": False, "total": 2, "failed": 1,
        "checks": [{"suite": "special", "name": "a", "passed": True},
                   {"suite": "special", "name": "b", "passed": False}],
    }

    code = main.run(["verify", "--suite", "special"])

    assert code == 1
    mock_service_class.return_value.verify.assert_called_once_with("special")
    assert "1/2 checks passed (seed 1)" in capsys.readouterr().out


@patch("main.NormService")
def test_run_table_csv_to_file(mock_service_class, temp_config):
    """Test writing the table as CSV to --out"""
    temp_dir, _ = temp_config
    mock_service_class.return_value.table.return_value = [{"alpha": 0.25, "th61": 3.0}]
    out = os.path.join(temp_dir, "table.csv")

    code = main.run(["table", "--alphas", "0.25", "--format", "csv", "--out", out])

    assert code == 0
    mock_service_class.return_value.table.assert_called_once_with([0.25])
    with open(out) as f:
        lines = f.read().splitlines()
    assert lines[0] == ",".join(TABLE_COLUMNS)
    assert lines[1].startswith("0.25,")


@patch("uvicorn.run")
def test_run_serve_uses_port_from_environment(mock_uvicorn_run, temp_config):
    """serve installs the configured service and reads PORT when --port is absent"""
    original = engine_api.norm_service
    try:
        with patch.dict(os.environ, {"PORT": "9100"}):
            code = main.run(["serve", "--seed", "7"])
        assert code == 0
        mock_uvicorn_run.assert_called_once_with(engine_api.app, host=DEFAULT_CONFIG["api_host"], port=9100)
        assert engine_api.norm_service.config["seed"] == 7
    finally:
        engine_api.norm_service = original


@patch("uvicorn.run")
def test_run_serve_port_flag_wins(mock_uvicorn_run, temp_config):
    original = engine_api.norm_service
    try:
        with patch.dict(os.environ, {"PORT": "9100"}):
            main.run(["serve", "--port", "9200", "--host", "0.0.0.0"])
        mock_uvicorn_run.assert_called_once_with(engine_api.app, host="0.0.0.0", port=9200)
    finally:
        engine_api.norm_service = original
