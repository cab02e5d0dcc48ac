"""Command-line checks: exit codes, table, JSON schema, series, mutation."""

import json
import re
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

CLI = sys.argv[1]
ROOT = Path(sys.argv[2])
SYSTEM = str(ROOT / "data" / "paper.ode")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=300)


def schema(name):
    return json.loads((ROOT / "schema" / name).read_text())


def test_table():
    r = run("analyze", SYSTEM, "--table")
    assert r.returncode == 0, r.stderr
    lines = [l for l in r.stdout.splitlines() if re.match(r"^\d+\s+(-|\d+\.\d+)\s", l)]
    assert len(lines) == 27
    assert "24 without zero coefficients, 8 triplets" in r.stdout
    assert "1.1      1/3  1/3           1/3           -1, 1 (3), 2 (2)" in r.stdout


def test_json_schema_and_determinism():
    a = run("analyze", SYSTEM, "--json", "--seed", "7")
    b = run("analyze", SYSTEM, "--json", "--seed", "7")
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    jsonschema.validate(doc, schema("analysis.schema.json"))
    assert len(doc["balances"]) == 27
    assert sum(1 for x in doc["balances"] if x["resonances"]) == 24


def test_parse_error():
    with tempfile.NamedTemporaryFile("w", suffix=".ode", delete=False) as f:
        f.write("vars x\nx'' = x + sin(x)\n")
    r = run("analyze", f.name)
    assert r.returncode == 2
    assert "line 2, column 11" in r.stderr
    r = run("analyze", f.name, "--json")
    assert r.returncode == 2
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, schema("error.schema.json"))
    assert doc["error"]["line"] == 2


def test_missing_file_and_stdin():
    assert run("analyze", "/nonexistent.ode").returncode == 2
    r = run("analyze", "-", stdin="x'' = 2*x^3\n")
    assert r.returncode == 0, r.stderr
    assert "-1, 4" in r.stdout


def test_analysis_failure():
    r = run("analyze", "-", stdin="x'' = -x\n")
    assert r.returncode == 1


def test_series():
    r = run("series", SYSTEM, "--balance", "2", "--max-order", "2")
    assert r.returncode == 0, r.stderr
    assert "r1_0" in r.stdout and "compatibility at order 2: satisfied" in r.stdout
    r = run("series", SYSTEM, "--balance", "2", "--max-order", "0", "--json")
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, schema("series.schema.json"))
    assert len(doc["coefficients"]) == 1
    assert doc["coefficients"][0]["values"] == ["1/3", "1/3", "1/3"]
    r = run("series", SYSTEM, "--balance", "8", "--direction", "left", "--max-order", "3", "--json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, schema("series.schema.json"))
    assert [s["name"] for s in doc["injected"]] == ["rm1_0", "rm1_1"]
    r = run("series", SYSTEM, "--balance", "8", "--direction", "right", "--max-order", "3")
    assert "warning" in r.stderr
    assert run("series", SYSTEM, "--balance", "1").returncode == 2


def test_verify_mutation():
    r = run("verify-paper", "--only", "1", "--corrupt-row", "5")
    assert r.returncode == 1
    assert "row 5 (triplet 2, member 1)" in r.stdout
    r = run("verify-paper", "--only", "1", "--only", "3")
    assert r.returncode == 0, r.stdout
    assert len(r.stdout.splitlines()) == 2


def test_integrate_and_poles():
    with tempfile.TemporaryDirectory() as d:
        csv = Path(d) / "traj.csv"
        r = run("integrate", str(ROOT / "data" / "scalar_cubic.ode"), "--init", "0.5, 0", "--to", "1", "--csv", str(csv))
        assert r.returncode == 0, r.stderr
        rows = csv.read_text().splitlines()
        assert rows[0] == "t_re,t_im,x_re,x_im,x'_re,x'_im"
        assert len(rows) > 2
    assert run("integrate", SYSTEM, "--init", "1, 2").returncode == 2
    r = run("poles", "--params", str(ROOT / "data" / "params.json"), "--json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["degree"] == 6 and len(doc["poles"]) == 6
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        f.write("{}")
    assert run("poles", "--params", f.name).returncode == 2


def main():
    failed = 0
    tests = [(k, v) for k, v in globals().items() if k.startswith("test_")]
    for name, fn in tests:
        try:
            fn()
            print(f"ok    {name}")
        except Exception as e:  # noqa: BLE001
            failed += 1
            print(f"FAIL  {name}: {type(e).__name__}: {e}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
