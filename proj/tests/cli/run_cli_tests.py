#!/usr/bin/env python3
"""End-to-end checks of the nsg binary: exit codes, JSON shape, determinism."""

import argparse
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

failures = []


def run(binary, *args, env=None):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, env=env, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def check(cond, label, detail=""):
    print(("ok   " if cond else "FAIL ") + label + ("" if cond else f"  {detail}"))
    if not cond:
        failures.append(label)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--binary", required=True)
    ap.add_argument("--schema", required=True)
    ap.add_argument("--data", required=True)
    opts = ap.parse_args()
    schema = json.loads(Path(opts.schema).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    data = Path(opts.data)
    nsg = opts.binary

    def json_run(label, args, want_code):
        code, out, err = run(nsg, *args, "--output", "json")
        check(code == want_code, f"{label}: exit {want_code}", f"got {code}, stderr {err.strip()[:200]}")
        try:
            doc = json.loads(out)
        except json.JSONDecodeError as e:
            check(False, f"{label}: stdout is JSON", str(e))
            return None
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        check(not errors, f"{label}: schema", errors[0].message[:300] if errors else "")
        return doc

    doc = json_run("analyze 3,5,7", ["analyze", "3,5,7"], 0)
    if doc:
        check(doc["numerator"] == [[0, 1], [10, -1], [12, -1], [14, -1], [17, 1], [19, 1]], "analyze 3,5,7 numerator")
        check(doc["gaps"] == [1, 2, 4] and doc["frobenius"] == 4, "analyze 3,5,7 gaps")

    for bad, code_name in [("2,4", "NonCoprime"), ("3,5,8", "NonMinimal"), ("0,3", "NonPositive")]:
        doc = json_run(f"analyze {bad}", ["analyze", bad], 2)
        if doc:
            check(doc["error"]["code"] == code_name, f"analyze {bad} error code", doc["error"]["code"])

    for gens in ["3,5,7", "2,3", "3,4,5", "5,6,7,8", "8,9,10,12", "10,14,15,21"]:
        doc = json_run(f"verify {gens}", ["verify", gens], 0)
        if doc:
            check(doc["summary"]["failed"] == 0, f"verify {gens} no failures")
            if "identity_count" in doc:
                check(doc["identity_count"]["match"], f"verify {gens} identity count")

    doc = json_run("verify bresinsky table", ["verify", "19,23,29,31,37", "--table", str(data / "bresinsky.json")], 0)
    if doc:
        check(doc["syzygy_table"] == "supplied", "bresinsky table is reported as supplied")
        check(any(c["family"] == "Symmetric5" for c in doc["checks"]), "bresinsky runs the quintuple family")
    json_run("verify table for wrong tuple", ["verify", "3,5,7", "--table", str(data / "bresinsky.json")], 2)

    code, out, _ = run(nsg, "verify", "3,5,7", "--families", "bresinsky4", "--output", "json")
    check(code == 0 and out == '{"checks":[]}\n', "empty report is exactly {\"checks\":[]}", repr(out))
    check(not list(validator.iter_errors(json.loads(out))), "empty report: schema")

    doc = json_run("partition 3,5,7", ["partition", "3,5,7", "--s", "0..40"], 0)
    if doc:
        check(all(r["match"] for r in doc["rows"]), "partition 3,5,7 matches the denumerant")
        check(doc["rows"][10]["denumerant"] == "2", "3,5,7 has two partitions of 10")
    doc = json_run("partition negative waves-only", ["partition", "3,5,7", "--s", "-14..-1", "--waves-only"], 0)
    if doc:
        check(all(r["total"] == "0" for r in doc["rows"]), "wave sum vanishes on -14..-1")
    json_run("partition negative without waves-only", ["partition", "3,5,7", "--s", "-3..2"], 2)

    doc = json_run("waves 5,6,7,8", ["waves", "5,6,7,8", "--s", "0..5"], 0)
    doc = json_run("count 8,9,10,12", ["count", "8,9,10,12"], 0)
    if doc:
        check(doc["total"] == "23", "count 8,9,10,12 is 23")

    code, _, _ = run(nsg, "frobnicate", "3,5")
    check(code == 2, "unknown subcommand exits 2", str(code))
    code, _, _ = run(nsg, "verify", "3,5,7", "--parallelism", "0")
    check(code == 2, "zero parallelism exits 2", str(code))

    for gens in ["8,9,10,12", "19,23,29,31,37"]:
        outputs = set()
        for p in ["1", "3", "8"]:
            for fmt in ["json", "text"]:
                _, out, _ = run(nsg, "verify", gens, "--parallelism", p, "--output", fmt)
                outputs.add((fmt, out))
        check(len(outputs) == 2, f"verify {gens} byte-identical across parallelism")

    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
