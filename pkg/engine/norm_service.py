"""
Hilbert Norms - Service Layer
=============================

Overview:
---------
Sits between the entry points (command line and HTTP API) and the numerical
engine. It turns space selectors into operator settings, evaluates the
results that govern each setting, and assembles the plain dicts that the
report writer and the API return.

The NormService class covers:
- Norm values and brackets for the six operator settings
- Bounds with their sup-search metadata
- Point evaluation of Hf and (Hf)' for registry functions
- Alpha tables, computed in parallel and returned in input order
- Named verification suites
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional

from .src.errors import ConfigError, DomainError
from .src.functions import resolve_function
from .src.hilbert_op import (COMPOSED, KERNEL, apply_integral, apply_matrix,
                             apply_weighted_composition, derivative)
from .src.norm_formulas import (BRACKET, EXACT, FORMULAS, Setting, Tolerance, resolve_setting,
                                th31_lower, th31_norm, th34_upper, th41_lower, th41_norm,
                                th52_lower, th53_upper, th61_certificate, th61_value, th71_value,
                                verdicts)
from .src.report_writer import FORMATS
from .src.verify import SuiteContext, run_suite

logger = logging.getLogger(__name__)

DEFAULT_CONFIG: Dict[str, Any] = {
    "tol_abs": 1e-12,
    "tol_rel": 1e-10,
    "max_evaluations": 2_000_000,
    "radial_samples": 512,
    "sup_radii": 64,
    "audit_angles": 64,
    "seed": 20240601,
    "trials": 100,
    "format": "text",
    "workers": 4,
    "api_host": "127.0.0.1",
    "api_port": 8000,
    "log_level": "INFO",
}

EVAL_METHODS = (KERNEL, COMPOSED, "matrix")
EXTREME_ALPHA_LOW = 0.01
EXTREME_ALPHA_HIGH = 0.99
MAX_TABLE_ROWS = 10_000
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def validate_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """
    Check and normalize a settings dict, filling missing keys from the defaults.

    Args:
        config: Settings, possibly partial

    Returns:
        dict: A complete settings dict

    Raises:
        ConfigError: For unknown keys or values of the wrong type or range
    """
    unknown = sorted(set(config) - set(DEFAULT_CONFIG))
    if unknown:
        raise ConfigError(f"unknown config key(s): {', '.join(unknown)}")
    merged = {**DEFAULT_CONFIG, **config}
    try:
        for key in ("tol_abs", "tol_rel"):
            merged[key] = float(merged[key])
            if not (merged[key] > 0 and math.isfinite(merged[key])):
                raise ConfigError(f"{key} must be a positive number, got {merged[key]}")
        for key in ("max_evaluations", "radial_samples", "sup_radii", "audit_angles",
                    "trials", "workers", "api_port"):
            if isinstance(merged[key], bool) or int(merged[key]) != merged[key]:
                raise ConfigError(f"{key} must be an integer, got {merged[key]!r}")
            merged[key] = int(merged[key])
            if merged[key] < 1:
                raise ConfigError(f"{key} must be positive, got {merged[key]}")
        if merged["radial_samples"] < 2 or merged["sup_radii"] < 2:
            raise ConfigError("radial_samples and sup_radii need at least 2 radii")
        if isinstance(merged["seed"], bool) or int(merged["seed"]) != merged["seed"] or merged["seed"] < 0:
            raise ConfigError(f"seed must be a nonnegative integer, got {merged['seed']!r}")
        merged["seed"] = int(merged["seed"])
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid config value: {e}")
    if merged["format"] not in FORMATS:
        raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {merged['format']!r}")
    merged["log_level"] = str(merged["log_level"]).upper()
    if merged["log_level"] not in LOG_LEVELS:
        raise ConfigError(f"log_level must be one of {', '.join(LOG_LEVELS)}, got {merged['log_level']!r}")
    return merged


def parse_alphas(text: str) -> List[float]:
    """
    Parse an alpha grid: "start:stop:step" (stop included) or a comma list.

    Args:
        text: Grid description, e.g. "0.1:0.9:0.1" or "0.25,0.5"

    Returns:
        list: The alpha values in order

    Raises:
        ConfigError: For malformed grids
    """
    text = text.strip()
    try:
        if ":" in text:
            parts = [float(p) for p in text.split(":")]
            if len(parts) != 3:
                raise ConfigError(f"an alpha range needs start:stop:step, got '{text}'")
            start, stop, step = parts
            if not step > 0 or stop < start:
                raise ConfigError(f"an alpha range needs step > 0 and stop >= start, got '{text}'")
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            if count > MAX_TABLE_ROWS:
                raise ConfigError(f"alpha range '{text}' has {count} rows, more than {MAX_TABLE_ROWS}")
            return [round(start + i * step, 12) for i in range(count)]
        values = [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse alpha grid '{text}'")
    if not values:
        raise ConfigError("the alpha grid is empty")
    if not all(math.isfinite(v) for v in values):
        raise ConfigError(f"alpha values must be finite, got '{text}'")
    return values


def is_extreme_alpha(alpha: Optional[float]) -> bool:
    """alpha is close to an end of (0, 1), where pi/sin(a pi) blows up."""
    if alpha is None:
        return False
    return 0.0 < alpha < EXTREME_ALPHA_LOW or EXTREME_ALPHA_HIGH < alpha < 1.0


class NormService:
    """
    Norm computations behind the command line and the HTTP API.

    Every public method returns plain dicts (numbers, strings, nested dicts),
    so callers can hand the result to the report writer or FastAPI as is.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Args:
            config: Settings dict; missing keys take DEFAULT_CONFIG values
        """
        self.config = validate_config(dict(config or {}))

    @property
    def tolerance(self) -> Tolerance:
        return Tolerance(self.config["tol_abs"], self.config["tol_rel"], self.config["max_evaluations"])

    def _setting(self, from_space: str, to_space: str, alpha: Optional[float]) -> Setting:
        setting = resolve_setting(from_space, to_space, alpha)
        if is_extreme_alpha(setting.alpha):
            logger.warning(f"alpha = {setting.alpha:g} is close to an end of (0, 1); "
                           f"pi/sin(a pi) is large there and the quadrature works near its limits")
        return setting

    def _evaluate(self, setting: Setting, diagnostics: bool) -> Dict[str, Any]:
        tol = self.tolerance
        alpha = setting.alpha
        n_radii = self.config["sup_radii"]
        report: Dict[str, Any] = {
            "setting": setting.label,
            "theorem": setting.theorem,
            "alpha": alpha,
            "formulas": list(setting.formulas),
        }
        if setting.theorem == "TH61":
            report.update(kind=EXACT, value=th61_value(), lower=th61_value(), upper=th61_value())
            if diagnostics:
                report["certificate"] = th61_certificate(tol, n_radii).to_dict()
        elif setting.theorem == "TH31":
            search = th31_norm(alpha, n_radii, tol=tol)
            report.update(kind=EXACT, value=search.value, lower=th31_lower(alpha, tol),
                          upper=th34_upper(alpha, tol))
            if diagnostics:
                report["search"] = search.to_dict()
        elif setting.theorem == "TH41":
            search = th41_norm(alpha, n_radii, tol=tol)
            report.update(kind=EXACT, value=search.value, lower=th41_lower(alpha), upper=search.value)
            if diagnostics:
                report["search"] = search.to_dict()
        elif setting.theorem == "TH52":
            report.update(kind=BRACKET, value=None, lower=th52_lower(alpha, tol), upper=th53_upper(alpha))
        elif setting.theorem == "TH71":
            result = th71_value(alpha, tol)
            report.update(kind=result.kind, value=result.value, lower=result.lower, upper=result.upper)
            if diagnostics:
                report["details"] = result.details
        else:
            raise DomainError(f"no evaluator for {setting.theorem}")
        return report

    def norm(self, from_space: str, to_space: str, alpha: Optional[float] = None) -> Dict[str, Any]:
        """
        The norm of H between two spaces, exact or bracketed.

        Args:
            from_space: Source selector
            to_space: Target selector
            alpha: Parameter of the weighted spaces

        Returns:
            dict: setting, theorem, alpha, formulas, kind, value, lower, upper

        Raises:
            UnboundedRegimeError: In settings where H is not bounded
            DomainError: For uncovered pairs or alpha outside the hypotheses
        """
        setting = self._setting(from_space, to_space, alpha)
        logger.info(f"Computing norm of H: {setting.label} ({setting.theorem})")
        return self._evaluate(setting, diagnostics=False)

    def bounds(self, from_space: str, to_space: str, alpha: Optional[float] = None) -> Dict[str, Any]:
        """
        Lower and upper bounds with the sup-search metadata behind them.

        Same keys as norm(), plus "search" (argmax radius, boundary flag,
        extrapolated limit), "certificate" or "details" depending on the result.
        """
        setting = self._setting(from_space, to_space, alpha)
        logger.info(f"Computing bounds of H: {setting.label} ({setting.theorem})")
        return self._evaluate(setting, diagnostics=True)

    def evaluate(self, function: str, z: complex, alpha: Optional[float] = None,
                 derivative_order: int = 0, method: str = KERNEL) -> Dict[str, Any]:
        """
        Hf(z) or (Hf)'(z) for a registry function.

        Args:
            function: Registry id, e.g. "const" or "poly:[1,0,2]"
            z: Point of the open disk
            alpha: Parameter of the alpha families
            derivative_order: 0 for Hf(z), 1 for (Hf)'(z)
            method: kernel, composed or matrix

        Returns:
            dict: function, z, quantity, method, value (and tail_bound for matrix)

        Raises:
            DomainError: For unknown functions or methods, |z| >= 1, or
                         matrix evaluation of a function without Taylor data
        """
        if method not in EVAL_METHODS:
            raise DomainError(f"unknown evaluation method '{method}'; expected one of {', '.join(EVAL_METHODS)}")
        if derivative_order not in (0, 1):
            raise DomainError(f"derivative order must be 0 or 1, got {derivative_order}")
        f = resolve_function(function, alpha)
        point = complex(z)
        arg: Any = point.real if point.imag == 0.0 else point
        tol = max(self.config["tol_rel"], 1e-14)
        result: Dict[str, Any] = {
            "function": f.name,
            "z": point,
            "quantity": "(Hf)'(z)" if derivative_order else "Hf(z)",
            "method": method,
        }
        if derivative_order == 1:
            if method == "matrix":
                raise DomainError("the matrix method evaluates Hf only; use kernel or composed for (Hf)'")
            value = derivative(f, arg, tol=tol, form=method, max_evaluations=self.config["max_evaluations"])
        elif method == "matrix":
            action = apply_matrix(f, arg, tol=tol)
            value = action.value
            result["tail_bound"] = action.tail_bound
            result["terms"] = action.terms
        elif method == COMPOSED:
            value = apply_weighted_composition(f, arg, tol=tol, max_evaluations=self.config["max_evaluations"])
        else:
            value = apply_integral(f, arg, tol=tol, max_evaluations=self.config["max_evaluations"])
        result["value"] = value
        logger.info(f"{result['quantity']} for {f.name} at z={point}: {value}")
        return result

    def table_row(self, alpha: float) -> Dict[str, Any]:
        """
        One row of the alpha table; cells outside a result's hypotheses are None.

        Args:
            alpha: Parameter, > 0

        Returns:
            dict: Keys in the order of report_writer.TABLE_COLUMNS
        """
        if not (alpha > 0.0 and math.isfinite(alpha)):
            raise DomainError(f"table rows need alpha > 0, got {alpha}")
        tol = self.tolerance
        n_radii = self.config["sup_radii"]
        row: Dict[str, Any] = {"alpha": alpha}
        in_unit = 0.0 < alpha < 1.0
        row["th31_lower"] = th31_lower(alpha, tol) if in_unit else None
        row["th31_norm"] = th31_norm(alpha, n_radii, tol=tol).value if in_unit else None
        row["th34_upper"] = th34_upper(alpha, tol) if in_unit else None
        row["th41_lower"] = th41_lower(alpha) if in_unit else None
        row["th41_norm"] = th41_norm(alpha, n_radii, tol=tol).value if in_unit else None
        in_bloch = 1.0 < alpha < 2.0
        row["th52_lower"] = th52_lower(alpha, tol) if in_bloch else None
        row["th53_upper"] = th53_upper(alpha) if in_bloch else None
        row["th61"] = th61_value()
        if in_unit:
            result = th71_value(alpha, tol)
            row["th71_lower"] = result.lower
            row["th71_exact_or_upper"] = result.upper
        else:
            row["th71_lower"] = None
            row["th71_exact_or_upper"] = None
        row["verdicts"] = ";".join(f"{k}={v}" for k, v in verdicts(alpha).items())
        logger.info(f"table row alpha={alpha:g} done")
        return row

    def table(self, alphas: List[float], workers: Optional[int] = None) -> List[Dict[str, Any]]:
        """
        Table rows for a grid of alphas, computed in parallel.

        Rows come back in the order of `alphas` whatever order they finish in.

        Args:
            alphas: Parameters
            workers: Thread count; defaults to the "workers" setting

        Returns:
            list: One dict per alpha
        """
        if not alphas:
            raise DomainError("the alpha grid is empty")
        for alpha in alphas:
            if not (alpha > 0.0 and math.isfinite(alpha)):
                raise DomainError(f"table rows need alpha > 0, got {alpha}")
            if is_extreme_alpha(alpha):
                logger.warning(f"alpha = {alpha:g} is close to an end of (0, 1)")
        workers = workers or self.config["workers"]
        logger.info(f"Computing table for {len(alphas)} alpha value(s) with {workers} worker(s)")
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(self.table_row, alphas))

    def verify(self, suite: str = "all", seed: Optional[int] = None,
               trials: Optional[int] = None) -> Dict[str, Any]:
        """
        Run a named verification suite.

        Returns:
            dict: suite, seed, passed flag, counts and the individual checks
        """
        ctx = SuiteContext(seed=self.config["seed"] if seed is None else seed,
                           trials=self.config["trials"] if trials is None else trials,
                           tol=self.tolerance,
                           sup_radii=self.config["sup_radii"],
                           audit_angles=self.config["audit_angles"])
        checks = run_suite(suite, ctx)
        failed = [c for c in checks if not c.passed]
        logger.info(f"verify {suite}: {len(checks) - len(failed)}/{len(checks)} checks passed")
        return {
            "suite": suite,
            "seed": ctx.seed,
            "passed": not failed,
            "total": len(checks),
            "failed": len(failed),
            "checks": [c.to_dict() for c in checks],
        }

    def formulas(self) -> List[Dict[str, Any]]:
        """The registered formulas with their alpha domains."""
        return [formula.to_dict() for formula in FORMULAS.values()]
