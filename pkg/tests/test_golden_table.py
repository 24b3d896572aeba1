import csv
import logging
import math
import os
import shutil
import tempfile
from unittest.mock import patch

import pytest

import main
from engine.src.report_writer import TABLE_COLUMNS

GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden", "table_0.1_0.9.csv")
SIGNIFICANT = 1e-10


@pytest.fixture
def temp_dir():
    """Temporary output directory with the default config path pointed into it"""
    dirpath = tempfile.mkdtemp()
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    with patch("main.default_config_path", return_value=os.path.join(dirpath, "config.json")):
        yield dirpath
    root.handlers[:] = handlers
    root.setLevel(level)
    shutil.rmtree(dirpath)


def _same_cell(a, b):
    try:
        x, y = float(a), float(b)
    except ValueError:
        return a == b
    return math.isclose(x, y, rel_tol=SIGNIFICANT, abs_tol=1e-300)


@pytest.fixture
def table(temp_dir):
    out = os.path.join(temp_dir, "table.csv")
    assert main.run(["table", "--alphas", "0.1:0.9:0.1", "--format", "csv", "--out", out]) == 0
    return out


def test_table_matches_golden_file(table):
    """Every column of the committed golden table is reproduced to 10 significant digits"""
    if not os.path.exists(GOLDEN):
        pytest.fail(f"golden table {GOLDEN} is missing; regenerate it with the table command and commit it")
    with open(GOLDEN, newline="") as f:
        golden = list(csv.DictReader(f))
    with open(table, newline="") as f:
        produced = list(csv.DictReader(f))
    columns = list(golden[0])
    assert set(columns) <= set(TABLE_COLUMNS)
    assert [row["alpha"] for row in produced] == [row["alpha"] for row in golden]
    for row, expected in zip(produced, golden):
        mismatched = [column for column in columns if not _same_cell(row[column], expected[column])]
        assert mismatched == [], f"alpha={row['alpha']}: {mismatched}"


def test_missing_golden_file_fails(temp_dir):
    """A missing golden table is a failure, and nothing is written in its place"""
    absent = os.path.join(temp_dir, "absent.csv")
    with patch(f"{__name__}.GOLDEN", absent):
        with pytest.raises(pytest.fail.Exception):
            test_table_matches_golden_file(os.path.join(temp_dir, "table.csv"))
    assert not os.path.exists(absent)


def test_table_anchor_cells(table):
    """Cells fixed by closed forms"""
    with open(table, newline="") as f:
        rows = {row["alpha"]: row for row in csv.DictReader(f)}
    assert list(rows) == ["0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9"]
    half = rows["0.5"]
    assert float(half["th41_lower"]) == pytest.approx(math.pi, rel=1e-14)
    assert float(half["th71_exact_or_upper"]) == pytest.approx(1.5 * math.pi, abs=1e-8)
    assert float(half["th61"]) == 3.0
    for row in rows.values():
        assert row["th52_lower"] == "" and row["th53_upper"] == ""
        assert float(row["th31_lower"]) <= float(row["th31_norm"]) + 1e-9
        assert float(row["th31_norm"]) <= float(row["th34_upper"]) + 1e-7
        assert float(row["th41_norm"]) >= float(row["th41_lower"]) - 1e-9
        assert float(row["th71_lower"]) <= float(row["th71_exact_or_upper"])
    assert rows["0.8"]["verdicts"].endswith("TH71=bracket")
    assert rows["0.6"]["verdicts"].endswith("TH71=exact")
