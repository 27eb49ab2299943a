#!/usr/bin/env python3
"""End-to-end contract tests for the command-line tool.

Usage: cli_contract.py /path/to/qphase
Exercises exit codes (0 success, 1 validation failure, 2 input error,
64 usage error), file formats, and determinism.
"""
import csv
import json
import math
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = Path(sys.argv[1])
FAILURES = []


def run(*args, **kw):
    return subprocess.run([str(CLI), *args], capture_output=True, text=True, **kw)


def check(name, cond, detail=""):
    status = "ok" if cond else "FAIL"
    print(f"{status:4} {name} {detail}")
    if not cond:
        FAILURES.append(name)


def write_state(path, doc):
    path.write_text(json.dumps(doc))


def main():
    tmp = Path(tempfile.mkdtemp(prefix="qphase_cli_"))
    r = 1.0 / math.sqrt(2.0)

    plus = tmp / "plus.json"
    write_state(plus, {"qubits": 1, "type": "pure", "data": [[r, 0.0], [r, 0.0]]})
    bell = tmp / "bell.json"
    write_state(bell, {"qubits": 2, "type": "pure",
                       "data": [[r, 0.0], [0.0, 0.0], [0.0, 0.0], [r, 0.0]]})
    rotated = tmp / "rotated.json"
    write_state(rotated, {"qubits": 2, "type": "pure",
                          "data": [[0.5, 0.0], [0.5, 0.0], [0.5, 0.0], [-0.5, 0.0]]})
    bad = tmp / "bad.json"
    write_state(bad, {"qubits": 1, "type": "pure", "data": [[1.0, 0.0], [1.0, 0.0]]})

    # --- phase-dist -------------------------------------------------------
    out = tmp / "dist.csv"
    res = run("phase-dist", "--state", str(plus), "--gamma", "1", "--points", "8",
              "--out", str(out))
    check("phase-dist exit 0", res.returncode == 0, res.stderr.strip())
    rows = list(csv.DictReader(out.open()))
    check("phase-dist rows", len(rows) == 8)
    p0 = float(rows[0]["p"])
    check("phase-dist p(0) = 1/pi", abs(p0 - 1.0 / math.pi) < 1e-12, f"p0={p0}")
    p_half = float(rows[4]["p"])
    check("phase-dist p(pi) = 0", abs(p_half) < 1e-15)
    total = sum(float(row["p"]) for row in rows) * 2.0 * math.pi / len(rows)
    check("phase-dist normalized", abs(total - 1.0) < 1e-6, f"sum={total}")

    res2 = run("phase-dist", "--state", str(plus), "--gamma", "1", "--points", "8",
               "--out", str(tmp / "dist2.csv"))
    check("phase-dist deterministic", res2.returncode == 0 and
          out.read_text() == (tmp / "dist2.csv").read_text())

    check("gamma out of range exits 64",
          run("phase-dist", "--state", str(plus), "--gamma", "1.5",
              "--out", str(out)).returncode == 64)
    check("points below 8 exits 64",
          run("phase-dist", "--state", str(plus), "--points", "4",
              "--out", str(out)).returncode == 64)
    check("invalid state exits 2",
          run("phase-dist", "--state", str(bad), "--out", str(out)).returncode == 2)
    check("missing state file exits 2",
          run("phase-dist", "--state", str(tmp / "nope.json"),
              "--out", str(out)).returncode == 2)
    check("missing required flag exits 64",
          run("phase-dist", "--state", str(plus)).returncode == 64)
    check("unknown subcommand exits 64", run("frobnicate").returncode == 64)
    check("help exits 0", run("--help").returncode == 0)

    # --- phase-herm -------------------------------------------------------
    res = run("phase-herm", "--state", str(plus))
    doc = json.loads(res.stdout)
    check("phase-herm exit 0", res.returncode == 0)
    check("phase-herm values", abs(doc["p_plus"] - 0.5) < 1e-12 and
          abs(doc["p_minus"] - 0.5) < 1e-12, res.stdout.strip())

    # --- joint-dist -------------------------------------------------------
    out2 = tmp / "joint.csv"
    res = run("joint-dist", "--state", str(bell), "--points", "16", "--out", str(out2))
    check("joint-dist exit 0", res.returncode == 0, res.stderr.strip())
    rows = list(csv.DictReader(out2.open()))
    check("joint-dist rows", len(rows) == 256)
    by_angle = {(row["phi_plus"], row["phi_minus"]): float(row["p"]) for row in rows}
    p00 = float(rows[0]["p"])
    check("joint-dist peak", abs(p00 - 2.0 / (2.0 * math.pi) ** 2) < 1e-12, f"p={p00}")
    total = sum(by_angle.values()) * (2.0 * math.pi / 16) ** 2
    check("joint-dist normalized", abs(total - 1.0) < 1e-6, f"sum={total}")
    check("joint-dist rejects one-qubit state",
          run("joint-dist", "--state", str(plus), "--out", str(out2)).returncode == 2)

    # --- entanglement -----------------------------------------------------
    res = run("entanglement", "--state", str(bell))
    doc = json.loads(res.stdout)
    check("entanglement Bell degree 1", abs(doc["degree"] - 1.0) < 1e-12)
    check("entanglement Bell concurrence 1", abs(doc["concurrence"] - 1.0) < 1e-12)
    check("entanglement d_plus 3/4", abs(doc["d_plus"] - 0.75) < 1e-12)
    reparsed = json.loads(json.dumps(doc))
    check("entanglement JSON round-trip", reparsed == doc)

    res = run("entanglement", "--state", str(rotated))
    doc = json.loads(res.stdout)
    check("rotated Bell degree 0 (basis dependence)", abs(doc["degree"]) < 1e-12)
    check("rotated Bell concurrence 1", abs(doc["concurrence"] - 1.0) < 1e-12)

    # --- sweep-epsilon ----------------------------------------------------
    out3 = tmp / "sweep.csv"
    res = run("sweep-epsilon", "--steps", "11", "--sign", "plus", "--out", str(out3))
    check("sweep exit 0", res.returncode == 0, res.stderr.strip())
    rows = list(csv.DictReader(out3.open()))
    check("sweep rows", len(rows) == 11)
    first, mid, last = rows[0], rows[5], rows[10]
    check("sweep endpoints", float(first["computed"]) == 0.0 and
          abs(float(last["computed"]) - 1.0) < 1e-12)
    check("sweep midpoint", abs(float(mid["computed"]) - 0.5) < 1e-12 and
          abs(float(mid["concurrence"]) - 1.0 / math.sqrt(2.0)) < 1e-12)
    check("sweep rows match prediction",
          all(abs(float(r["computed"]) - float(r["predicted"])) <= 1e-12 for r in rows))
    check("sweep bad sign exits 64",
          run("sweep-epsilon", "--steps", "5", "--sign", "sideways",
              "--out", str(out3)).returncode == 64)

    # --- validate ---------------------------------------------------------
    res = run("validate")
    check("validate exit 0", res.returncode == 0, res.stderr.strip().splitlines()[-1]
          if res.stderr.strip() else "")
    for seed in (1, 2, 3):
        check(f"validate seed {seed} exit 0",
              run("validate", "--seed", str(seed)).returncode == 0)
    res = run("validate", "--seed", "5", "--json")
    doc = json.loads(res.stdout)
    check("validate JSON report", doc["pass"] is True and len(doc["checks"]) > 40)
    check("validate negative tolerance scale exits 64",
          run("validate", "--tol-scale", "-1").returncode == 64)

    print(f"cli_contract: {len(FAILURES)} failures")
    return 1 if FAILURES else 0


if __name__ == "__main__":
    sys.exit(main())
