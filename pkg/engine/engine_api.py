"""
Hilbert Norms - HTTP API
========================

This module exposes the norm computations over HTTP using FastAPI. Every
endpoint returns the same dict the command line renders as JSON.

The API serves:
- Norm values and brackets for an operator setting
- Bounds with sup-search metadata
- Point evaluation of Hf and (Hf)'
- Alpha tables
- The registered formulas and their alpha domains
"""
import logging
import os
from typing import Any, Dict, Optional

import uvicorn
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .norm_service import DEFAULT_CONFIG, NormService, parse_alphas
from .src.errors import ConfigError, DomainError, NumericalError, UnboundedRegimeError
from .src.report_writer import TABLE_COLUMNS, json_ready

logger = logging.getLogger(__name__)

app = FastAPI(title="Hilbert Matrix Operator Norms API")

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Replaced by main.py's serve command with a service built from the run config
norm_service = NormService(dict(DEFAULT_CONFIG))


def _http_error(e: Exception) -> HTTPException:
    if isinstance(e, UnboundedRegimeError):
        return HTTPException(status_code=422, detail={"error": str(e), "regime": e.regime})
    if isinstance(e, (DomainError, ConfigError)):
        return HTTPException(status_code=400, detail=str(e))
    if isinstance(e, NumericalError):
        return HTTPException(status_code=500, detail=str(e))
    return HTTPException(status_code=500, detail=f"unexpected error: {e}")


#
# API Endpoints
#

@app.get("/api/norm")
def get_norm(source: str, target: str, alpha: Optional[float] = None) -> Dict[str, Any]:
    """
    Norm of H from `source` to `target`.

    Args:
        source: Source space selector
        target: Target space selector
        alpha: Parameter of the weighted spaces

    Returns:
        dict: The norm report

    Raises:
        HTTPException: 400 for bad input, 422 for an unbounded setting, 500 on numerical failure
    """
    try:
        return json_ready(norm_service.norm(source, target, alpha))
    except Exception as e:
        raise _http_error(e)


@app.get("/api/bounds")
def get_bounds(source: str, target: str, alpha: Optional[float] = None) -> Dict[str, Any]:
    """Bounds with sup-search metadata for an operator setting."""
    try:
        return json_ready(norm_service.bounds(source, target, alpha))
    except Exception as e:
        raise _http_error(e)


@app.get("/api/eval")
def get_eval(function: str, z: str = "0", alpha: Optional[float] = None,
             derivative: int = 0, method: str = "kernel") -> Dict[str, Any]:
    """
    Hf(z) or (Hf)'(z) for a registry function.

    Args:
        function: Registry id
        z: Point of the disk, written as a Python complex literal ("0.5", "0.1+0.2j")
        alpha: Parameter of the alpha families
        derivative: 0 for Hf, 1 for (Hf)'
        method: kernel, composed or matrix
    """
    try:
        point = complex(z.replace(" ", ""))
    except ValueError:
        raise HTTPException(status_code=400, detail=f"cannot parse z = '{z}'")
    try:
        return json_ready(norm_service.evaluate(function, point, alpha, derivative, method))
    except Exception as e:
        raise _http_error(e)


@app.get("/api/table")
def get_table(alphas: str) -> Dict[str, Any]:
    """
    The alpha table.

    Args:
        alphas: "start:stop:step" or a comma list

    Returns:
        dict: columns, rows and count
    """
    try:
        rows = norm_service.table(parse_alphas(alphas))
    except Exception as e:
        raise _http_error(e)
    return {"columns": list(TABLE_COLUMNS), "rows": json_ready(rows), "count": len(rows)}


@app.get("/api/formulas")
def get_formulas() -> Dict[str, Any]:
    """The registered formulas."""
    return {"formulas": norm_service.formulas()}


# For running the API server standalone: python -m engine.engine_api
if __name__ == "__main__":
    port = int(os.environ.get("PORT", DEFAULT_CONFIG["api_port"]))
    uvicorn.run("engine.engine_api:app", host=DEFAULT_CONFIG["api_host"], port=port)
