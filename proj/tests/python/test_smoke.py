"""Smoke tests for the python module and the command-line tool."""

import csv
import io
import json
import os
import shutil
import subprocess

import pytest

circulant = pytest.importorskip("circulant")


def test_known_counts():
    assert circulant.tau(2, [1], [1], 5) == 16820
    assert circulant.tau(1, [1, 2], [], 4) == 36
    assert circulant.tau(3, [1], [1], 1) == 12
    assert circulant.tau(1, [1], [], 9, method="chebyshev") == 9


def test_big_count_is_exact_python_int():
    # n = 64: far beyond double precision
    t = circulant.tau(2, [1], [1], 64, method="chebyshev")
    want = 64 * (circulant.chebyshev_t(64, 3) + 1)
    assert t == want
    assert t > 10**48


def test_validation_errors():
    with pytest.raises(ValueError):
        circulant.validate(1, [2, 4], [], 6)  # disconnected
    with pytest.raises(ValueError):
        circulant.validate(1, [3], [], 4)  # jump out of range
    spec = circulant.validate(2, [1, 2, 3], [1], 4)
    assert spec["m"] == 8 and spec["d"] == 1


def test_tau_report_schema_and_agreement():
    doc = circulant.tau_report(2, [1], [1], 5)
    for key in ("spec", "value", "method", "certified", "precision_bits"):
        assert key in doc
    assert doc["value"] == "16820"
    assert doc["agreement"] is True


def test_decompose():
    doc = circulant.decompose(3, [1], [1], 2)
    assert doc["tau"] == 384
    assert doc["coefficient"] == 3
    assert doc["a"] == 8
    assert doc["matches_prediction"] is True


def test_mahler_growth_constant():
    doc = circulant.mahler(2, [1, 2, 3], [1], 5, quadrature=False)
    A = float(doc["growth_constant"]["mid"])
    assert abs(A - 42.4038) < 5e-4
    assert doc["prefactor"] == {"num": "1", "den": "28"}


def test_laplacian_rows():
    rows = circulant.laplacian(1, [1, 2], [], 4)
    assert rows[0] == [4, -1, -2, -1]
    assert all(sum(row) == 0 for row in rows)


def test_chebyshev():
    assert circulant.chebyshev_t(3, 3) == 99
    assert circulant.chebyshev_t(0, 7) == 1


def _cli_path():
    path = os.environ.get("CIRCULANT_CLI")
    if path and os.path.exists(path):
        return path
    found = shutil.which("circulant")
    if found:
        return found
    pytest.skip("command-line binary not available")


def test_cli_deterministic_json():
    cli = _cli_path()
    cmd = [cli, "tau", "--beta", "2", "--s", "1", "--alpha", "1", "--n", "5",
           "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True)
    second = subprocess.run(cmd, capture_output=True, text=True, check=True)
    assert first.stdout == second.stdout
    doc = json.loads(first.stdout)
    assert doc["value"] == "16820"
    assert doc["agreement"] is True


def test_cli_exit_codes():
    cli = _cli_path()
    bad = subprocess.run(
        [cli, "tau", "--beta", "1", "--s", "2,4", "--n", "6"],
        capture_output=True, text=True)
    assert bad.returncode == 2

    starved = subprocess.run(
        [cli, "tau", "--beta", "2", "--s", "1", "--alpha", "1", "--n", "5",
         "--precision-max", "64"],
        capture_output=True, text=True)
    assert starved.returncode == 4

    sweep = subprocess.run(
        [cli, "decompose", "--beta", "3", "--s", "1", "--alpha", "1",
         "--n-range", "1..4", "--format", "csv"],
        capture_output=True, text=True, check=True)
    rows = list(csv.reader(io.StringIO(sweep.stdout)))
    assert len(rows) == 5  # header + 4 rows
    a_col = rows[0].index("a")
    assert [r[a_col] for r in rows[1:]] == ["2", "8", "37", "176"]
