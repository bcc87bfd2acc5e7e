#!/usr/bin/env python3
"""End-to-end checks for the dhs CLI: exit codes, reproducibility, formats."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BINARY = sys.argv[1]
failures = []


def run(*args, expect_code=0):
    result = subprocess.run([BINARY, *args], capture_output=True, text=True)
    if result.returncode != expect_code:
        failures.append(
            f"{' '.join(args)}: exit {result.returncode}, expected {expect_code}\n"
            f"stderr: {result.stderr.strip()}"
        )
    return result


def check(ok, message):
    if not ok:
        failures.append(message)


# exit codes
run("niven", "classify", "--turns", "1/6")
run("--definitely-not-a-flag", expect_code=2)
run("chsh", "svalue", "--p", "15", expect_code=3)          # composite
run("chsh", "svalue", "--p", "11", expect_code=3)          # prime but too small
run("niven", "classify", "--turns", "1/0", expect_code=3)  # zero denominator
run("niven", "classify", "--turns", "x", expect_code=3)    # malformed
run("mz", "admissible", "--cos", "1/2", expect_code=3)     # exceptional cosine
run(expect_code=2)                                          # missing subcommand

# pinned outputs
classified = run("niven", "classify", "--turns", "1/6")
check(classified.stdout.strip() == "rational 1/2",
      f"unexpected classify output: {classified.stdout!r}")
check(run("niven", "classify", "--turns", "1/17").stdout.startswith("irrational 0.93247222940435580"),
      "unexpected irrational output")

# byte-identical reruns for every seeded subcommand
for args in (
    ["sweep", "--p-list", "17,101", "--trials", "200", "--seed", "1", "--format", "csv"],
    ["sweep", "--p-list", "17,101", "--trials", "200", "--seed", "1", "--format", "json"],
    ["chsh", "table", "--p", "17", "--trials", "32", "--seed", "5", "--format", "csv"],
    ["chsh", "scan", "--p", "13", "--trials", "100", "--seed", "9"],
    ["mz", "si-check", "--trials", "100", "--seed", "3", "--p", "101"],
):
    first = run(*args)
    second = run(*args)
    check(first.stdout == second.stdout, f"non-deterministic output for {' '.join(args)}")

# a different seed must change something observable in the table
base = run("chsh", "table", "--p", "17", "--trials", "32", "--seed", "5", "--format", "csv")
other = run("chsh", "table", "--p", "17", "--trials", "32", "--seed", "6", "--format", "csv")
check(base.stdout != other.stdout, "table output ignores the seed")

# sweep CSV: schema, round-tripping fields, singular-limit shape
sweep = run("sweep", "--p-list", "17,101,1009,10007", "--trials", "500", "--seed", "1",
            "--format", "csv")
lines = sweep.stdout.strip().splitlines()
check(lines[0] == "p,s_value_abs,s_error,undefined_cell_fraction,correlation_max_error",
      f"unexpected CSV header: {lines[0]}")
check(len(lines) == 5, f"expected 4 data rows, got {len(lines) - 1}")
previous_error = None
for line in lines[1:]:
    p_text, s_abs, s_err, fraction, corr_err = line.split(",")
    p = int(p_text)
    for numeric in (s_abs, s_err, corr_err):
        value = float(numeric)  # must parse back to the emitted value
        check(repr(value) == numeric, f"field {numeric!r} is not shortest round-trip decimal")
    check(fraction == "1/4", f"undefined fraction {fraction} is not 1/4")
    check(float(corr_err) <= 1.0 / p, f"correlation error above 1/p at p={p}")
    check(abs(float(s_abs) - 2 * 2 ** 0.5) <= 4.0 / p, f"|S| misses 2*sqrt(2) bound at p={p}")
    if previous_error is not None:
        check(float(s_err) < previous_error, "s_error is not strictly decreasing")
    previous_error = float(s_err)

# sweep JSON mirrors the CSV
sweep_json = json.loads(run("sweep", "--p-list", "17,101", "--trials", "100", "--seed", "2",
                            "--format", "json").stdout)
check([row["p"] for row in sweep_json] == [17, 101], "JSON sweep rows out of order")
check(all(row["undefined_cell_fraction"] == "1/4" for row in sweep_json),
      "JSON undefined fraction is not 1/4")
check(all(set(row) == {"p", "s_value_abs", "s_error", "undefined_cell_fraction",
                       "correlation_max_error"} for row in sweep_json),
      "JSON sweep keys do not match the schema")

# --out writes the same bytes as stdout
with tempfile.TemporaryDirectory() as tmp:
    out_path = Path(tmp) / "rows.csv"
    direct = run("sweep", "--p-list", "17", "--trials", "50", "--seed", "4")
    run("sweep", "--p-list", "17", "--trials", "50", "--seed", "4", "--out", str(out_path))
    check(out_path.read_text() == direct.stdout, "--out file differs from stdout output")

# every chsh table column carries exactly one undefined cell
table = run("chsh", "table", "--p", "101", "--trials", "64", "--seed", "11", "--format", "csv")
rows = table.stdout.strip().splitlines()
check(rows[0] == "trial,x0,x1,y0,y1", "unexpected table header")
for line in rows[1:-1]:
    cells = line.split(",")[1:]
    check(cells.count("U") == 1, f"column does not have exactly one undefined cell: {line}")
check(rows[-1] == "undefined_cell_fraction 1/4", "table summary line missing")

if failures:
    print("FAILED CLI checks:")
    for failure in failures:
        print(" -", failure)
    sys.exit(1)
print("all CLI checks passed")
