"""
Hilbert Matrix Operator Norms - Command Line
============================================

Overview:
---------
This script is the entry point for computing norms of the Hilbert matrix
operator H between weighted spaces of analytic functions on the unit disk
(Korenblum, logarithmically weighted Korenblum, alpha-Bloch and H^inf).
It loads the configuration, parses the subcommand and writes the report to
stdout or to a file; log output goes to stderr.

Features:
---------
* Configurable through config.json and command-line flags
* Text, JSON and CSV reports with 15 significant digits
* Alpha tables computed in parallel, rows in input order
* Named verification suites with a nonzero exit code on any failed check
* The HTTP API, launched with uvicorn

Usage Examples:
--------------
# Norm from H^inf into the Bloch space
python main.py norm --from hardy-inf --to bloch

# Norm from the Korenblum space into the (alpha+1)-Bloch space
python main.py norm --from korenblum --to bloch-plus-one --alpha 0.5

# H(1)(0)
python main.py eval --function const --z 0

# Table over an alpha grid as CSV
python main.py table --alphas 0.1:0.9:0.1 --format csv --out table.csv

# Every verification suite
python main.py verify --suite all

Configuration Hierarchy:
----------------------
1. Default values (defined in engine.norm_service.DEFAULT_CONFIG)
2. Values from config.json, or the file given with --config
3. Command-line arguments (highest priority; serve also reads PORT)

Exit Codes:
----------
0 success, 1 verification failure, 2 invalid configuration or argument,
3 unbounded setting requested, 4 numerical failure
"""
import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from engine.norm_service import DEFAULT_CONFIG, NormService, parse_alphas, validate_config
from engine.src.errors import ConfigError, HilbertNormError, UnboundedRegimeError
from engine.src.report_writer import FORMATS, TABLE_COLUMNS, render, write_report
from engine.src.spaces import SELECTORS
from engine.src.verify import SUITES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
COMMANDS = ("norm", "bounds", "eval", "verify", "table", "serve")


def default_config_path() -> str:
    """config.json next to this script."""
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), "config.json")


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load the run settings.

    Without a path, config.json next to this script is read; it is created
    with the default values when missing, and a file that cannot be parsed
    is ignored with a warning. An explicit path must exist and parse.

    Args:
        path: Config file given with --config, or None

    Returns:
        dict: Validated settings (tolerances, sampling sizes, seed, trials,
              format, workers, API host/port, log level)

    Raises:
        ConfigError: For a missing or malformed explicit file, or invalid values
    """
    if path is not None:
        try:
            with open(path, "r") as f:
                loaded = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config file {path}: {e}")
        if not isinstance(loaded, dict):
            raise ConfigError(f"config file {path} must hold a JSON object")
        return validate_config(loaded)

    config_path = default_config_path()
    try:
        if os.path.exists(config_path):
            with open(config_path, "r") as f:
                loaded = json.load(f)
            if not isinstance(loaded, dict):
                raise ValueError("config.json must hold a JSON object")
            return validate_config(loaded)
        with open(config_path, "w") as f:
            json.dump(DEFAULT_CONFIG, f, indent=4)
        logger.info(f"Created new config file at {config_path} with default values")
    except (OSError, ValueError) as e:
        logger.warning(f"Error with config file: {e}. Using defaults.")
    return dict(DEFAULT_CONFIG)


@dataclass
class RunConfig:
    """
    One parsed invocation.

    Attributes:
        command: Subcommand name
        settings: Validated settings after flag overrides
        fmt: Output format
        out: Output file, or None for stdout
        options: Subcommand arguments (spaces, alpha, function, suite, ...)
    """
    command: str
    settings: Dict[str, Any]
    fmt: str
    out: Optional[str] = None
    options: Dict[str, Any] = field(default_factory=dict)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None,
                        help="Config file (default: config.json next to main.py)")
    common.add_argument("--format", type=str, choices=FORMATS, default=None,
                        help="Report format (default: from config)")
    common.add_argument("--out", type=str, default=None, help="Write the report to this file")
    common.add_argument("--seed", type=int, default=None, help="Seed for random test functions")
    common.add_argument("--tol", type=float, default=None,
                        help="Quadrature tolerance, absolute and relative")
    common.add_argument("--verbose", action="store_true", help="Debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subparser per command."""
    common = _common_options()
    parser = argparse.ArgumentParser(description="Norms of the Hilbert matrix operator")
    commands = parser.add_subparsers(dest="command", required=True)

    for name, text in (("norm", "Norm of H between two spaces"),
                       ("bounds", "Lower and upper bounds with sup-search metadata")):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("--from", dest="from_space", required=True, choices=SELECTORS,
                         help="Source space")
        sub.add_argument("--to", dest="to_space", required=True, choices=SELECTORS,
                         help="Target space")
        sub.add_argument("--alpha", type=float, default=None, help="Space parameter")

    ev = commands.add_parser("eval", parents=[common], help="Evaluate Hf(z) or (Hf)'(z)")
    ev.add_argument("--function", required=True,
                    help="Registry id: const, monomial:K, poly:[a0,a1,...], f_alpha, f_alpha_plain, h_alpha, h_one")
    ev.add_argument("--z", type=str, default="0", help="Point of the open disk, e.g. 0.5 or 0.1+0.2j")
    ev.add_argument("--alpha", type=float, default=None, help="Parameter of the alpha families")
    ev.add_argument("--derivative", action="store_true", help="Evaluate (Hf)'(z)")
    ev.add_argument("--method", choices=("kernel", "composed", "matrix"), default="kernel",
                    help="Representation of H used for the evaluation")

    ver = commands.add_parser("verify", parents=[common], help="Run verification suites")
    ver.add_argument("--suite", choices=("all", *SUITES), default="all", help="Suite name")
    ver.add_argument("--trials", type=int, default=None, help="Random polynomials per certificate")

    tab = commands.add_parser("table", parents=[common], help="Results over an alpha grid")
    tab.add_argument("--alphas", required=True, help="start:stop:step or a comma list")
    tab.add_argument("--workers", type=int, default=None, help="Parallel rows")

    srv = commands.add_parser("serve", parents=[common], help="Run the HTTP API")
    srv.add_argument("--host", type=str, default=None, help="Bind address")
    srv.add_argument("--port", type=int, default=None, help="Port (default: PORT, then config)")
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level, logging.INFO),
                        format="%(asctime)s - %(levelname)s - %(message)s",
                        stream=sys.stderr, force=True)


def resolve_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Merge flags over the loaded settings.

    Raises:
        ConfigError: For invalid settings or overrides
    """
    settings = load_config(args.config)
    if args.seed is not None:
        settings["seed"] = args.seed
    if args.tol is not None:
        settings["tol_abs"] = args.tol
        settings["tol_rel"] = args.tol
    if args.format is not None:
        settings["format"] = args.format
    if getattr(args, "trials", None) is not None:
        settings["trials"] = args.trials
    if getattr(args, "workers", None) is not None:
        settings["workers"] = args.workers
    if args.verbose:
        settings["log_level"] = "DEBUG"
    settings = validate_config(settings)
    skip = {"command", "config", "format", "out", "seed", "tol", "verbose", "trials", "workers"}
    options = {k: v for k, v in vars(args).items() if k not in skip}
    return RunConfig(args.command, settings, settings["format"], args.out, options)


def _emit(payload: Any, run_config: RunConfig, columns=None) -> None:
    write_report(render(payload, run_config.fmt, columns), run_config.out)


def _run_norm(service: NormService, run_config: RunConfig) -> int:
    o = run_config.options
    _emit(service.norm(o["from_space"], o["to_space"], o["alpha"]), run_config)
    return EXIT_OK


def _run_bounds(service: NormService, run_config: RunConfig) -> int:
    o = run_config.options
    _emit(service.bounds(o["from_space"], o["to_space"], o["alpha"]), run_config)
    return EXIT_OK


def _run_eval(service: NormService, run_config: RunConfig) -> int:
    o = run_config.options
    try:
        z = complex(o["z"].replace(" ", ""))
    except ValueError:
        raise ConfigError(f"cannot parse --z '{o['z']}' as a complex number")
    result = service.evaluate(o["function"], z, o["alpha"], 1 if o["derivative"] else 0, o["method"])
    _emit(result, run_config)
    return EXIT_OK


def _run_verify(service: NormService, run_config: RunConfig) -> int:
    result = service.verify(run_config.options["suite"])
    if run_config.fmt == "json":
        _emit(result, run_config)
    else:
        document = render(result["checks"], run_config.fmt)
        if run_config.fmt == "text":
            document += (f"\nsuite {result['suite']}: {result['total'] - result['failed']}/"
                         f"{result['total']} checks passed (seed {result['seed']})\n")
        write_report(document, run_config.out)
    if not result["passed"]:
        logger.error(f"{result['failed']} verification check(s) failed")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _run_table(service: NormService, run_config: RunConfig) -> int:
    rows = service.table(parse_alphas(run_config.options["alphas"]))
    _emit(rows, run_config, TABLE_COLUMNS)
    return EXIT_OK


def _run_serve(service: NormService, run_config: RunConfig) -> int:
    import uvicorn
    from engine import engine_api

    port = run_config.options.get("port")
    if port is None:
        port = int(os.environ.get("PORT", run_config.settings["api_port"]))
    host = run_config.options.get("host") or run_config.settings["api_host"]
    engine_api.norm_service = service
    logger.info(f"Starting API on {host}:{port}...")
    uvicorn.run(engine_api.app, host=host, port=port)
    return EXIT_OK


RUNNERS = {
    "norm": _run_norm,
    "bounds": _run_bounds,
    "eval": _run_eval,
    "verify": _run_verify,
    "table": _run_table,
    "serve": _run_serve,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one command and return the exit code.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None

    Returns:
        int: 0 success, 1 verification failure, 2 invalid configuration,
             3 unbounded setting, 4 numerical failure
    """
    args = build_parser().parse_args(argv)
    _configure_logging("DEBUG" if args.verbose else DEFAULT_CONFIG["log_level"])
    try:
        run_config = resolve_run_config(args)
        _configure_logging(run_config.settings["log_level"])
        logger.info(f"Running {run_config.command}")
        service = NormService(run_config.settings)
        code = RUNNERS[run_config.command](service, run_config)
        logger.info(f"Finished {run_config.command} with exit code {code}")
        return code
    except UnboundedRegimeError as e:
        logger.error(f"Unbounded setting ({e.regime}): {e}")
        print(f"error: {e} [regime: {e.regime}]", file=sys.stderr)
        return e.exit_code
    except HilbertNormError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


def main():
    """Console entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
