"""
Report Writer
=============

Overview:
---------
Serializes norm reports, verification results and alpha tables as text, JSON
or CSV. Every real number is written as a decimal with 15 significant digits,
so JSON and CSV renderings of the same table carry identical numbers.

Features:
---------
* Fixed column order and a header row for CSV
* Stable key order for JSON (the order in which reports build their dicts)
* Aligned plain-text tables and indented key/value blocks for the terminal
"""
import csv
import io
import json
import logging
import math
import os
from typing import Any, Dict, List, Optional, Sequence

from .errors import ConfigError

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "csv")
SIGNIFICANT_DIGITS = 15

TABLE_COLUMNS = (
    "alpha", "th31_lower", "th31_norm", "th34_upper", "th41_lower", "th41_norm",
    "th52_lower", "th53_upper", "th61", "th71_lower", "th71_exact_or_upper", "verdicts",
)


def format_number(value: Any) -> str:
    """
    Render one cell.

    None becomes an empty cell, floats get 15 significant digits, everything
    else goes through str().
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if not math.isfinite(value):
            return "inf" if value > 0 else "-inf" if value < 0 else "nan"
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    if isinstance(value, complex):
        return f"{format_number(value.real)}{'+' if value.imag >= 0 else '-'}{format_number(abs(value.imag))}j"
    return str(value)


def json_ready(value: Any) -> Any:
    """Convert a report to JSON-native types, rounding floats to 15 significant digits."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return format_number(value)
        return float(f"{value:.{SIGNIFICANT_DIGITS}g}")
    if isinstance(value, complex):
        return {"re": json_ready(value.real), "im": json_ready(value.imag)}
    if isinstance(value, dict):
        return {str(k): json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_ready(v) for v in value]
    if hasattr(value, "to_dict"):
        return json_ready(value.to_dict())
    if hasattr(value, "item"):
        # numpy scalars
        return json_ready(value.item())
    return str(value)


def to_json(payload: Any) -> str:
    """JSON text with rounded numbers and the payload's own key order."""
    return json.dumps(json_ready(payload), indent=2) + "\n"


def _flatten(payload: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    flat: Dict[str, Any] = {}
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, (list, tuple)):
            flat[name] = ";".join(format_number(v) for v in value)
        else:
            flat[name] = value
    return flat


def to_csv(rows: Sequence[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
    """
    CSV text with a header row.

    Args:
        rows: Records to write
        columns: Column order; defaults to the keys of the first row

    Returns:
        str: The CSV document
    """
    flat_rows = [_flatten(row) for row in rows]
    if columns is None:
        columns = list(flat_rows[0]) if flat_rows else []
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in flat_rows:
        writer.writerow([format_number(row.get(column)) for column in columns])
    return buffer.getvalue()


def _text_block(payload: Dict[str, Any], indent: int = 0) -> List[str]:
    lines = []
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_text_block(value, indent + 1))
        elif isinstance(value, (list, tuple)) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.extend(_text_block(item, indent + 1))
                lines.append("")
        elif isinstance(value, (list, tuple)):
            lines.append(f"{pad}{key}: {', '.join(format_number(v) for v in value)}")
        else:
            lines.append(f"{pad}{key}: {format_number(value)}")
    return lines


def to_text_table(rows: Sequence[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
    """Whitespace-aligned table, one row per record."""
    if columns is None:
        columns = list(rows[0]) if rows else []
    cells = [[format_number(row.get(column)) for column in columns] for row in rows]
    widths = [max([len(column)] + [len(line[i]) for line in cells]) for i, column in enumerate(columns)]
    lines = ["  ".join(column.ljust(width) for column, width in zip(columns, widths)).rstrip()]
    for line in cells:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render(payload: Any, fmt: str, columns: Optional[Sequence[str]] = None) -> str:
    """
    Render a report dict or a list of row dicts.

    Args:
        payload: A dict (single report) or a list of dicts (table rows)
        fmt: One of FORMATS
        columns: Column order for tables

    Returns:
        str: The rendered document

    Raises:
        ConfigError: For an unknown format
    """
    if fmt not in FORMATS:
        raise ConfigError(f"unknown output format '{fmt}'; expected one of {', '.join(FORMATS)}")
    if fmt == "json":
        return to_json(payload)
    rows = payload if isinstance(payload, list) else [payload]
    rows = [_as_dict(row) for row in rows]
    if fmt == "csv":
        return to_csv(rows, columns)
    if isinstance(payload, list):
        return to_text_table([_flatten(row) for row in rows], columns)
    return "\n".join(_text_block(rows[0])) + "\n"


def _as_dict(row: Any) -> Dict[str, Any]:
    if hasattr(row, "to_dict"):
        return row.to_dict()
    return row


def write_report(document: str, out: Optional[str] = None) -> None:
    """
    Emit a rendered document to a file, or to stdout when out is None.

    Raises:
        ConfigError: If the output file cannot be written
    """
    if out is None:
        print(document, end="")
        return
    try:
        directory = os.path.dirname(os.path.abspath(out))
        os.makedirs(directory, exist_ok=True)
        with open(out, "w", newline="") as f:
            f.write(document)
    except OSError as e:
        raise ConfigError(f"cannot write report to {out}: {e}")
    logger.info(f"Report written to {out}")
