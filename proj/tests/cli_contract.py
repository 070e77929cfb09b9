#!/usr/bin/env python3
"""Black-box checks of the turaev CLI: exit codes, exact outputs, JSON schemas."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema

# (schema name, argv, expected exit code)
SCHEMA_CASES = [
    ("alexander", ["alexander", "4", "5"], 0),
    ("alexander", ["alexander", "4", "5", "--closed-form"], 0),
    ("alexander", ["alexander", "1", "7"], 0),
    ("hfk", ["hfk", "4", "5"], 0),
    ("hfk", ["hfk", "11", "37"], 0),
    ("width", ["width", "5", "13"], 0),
    ("scan", ["scan", "--bound", "40", "--jobs", "2"], 0),
    ("braid-eq", ["braid-eq", "--strands", "3", "121", "212"], 0),
    ("braid-eq", ["braid-eq", "--strands", "3", "1122", "1111"], 1),
    ("braid-eq", ["braid-eq", "--strands", "3", "--cyclic", "1112", "1222"], 0),
    ("verify-lemmas", ["verify-lemmas", "--n-max", "2"], 0),
    ("turaev-genus", ["turaev-genus", "--strands", "4", "(123)^5"], 0),
    ("dalt", ["dalt", "--strands", "3", "(12)^4"], 0),
    ("states", ["states", "--strands", "3", "1212", "--assignment", "all-B"], 0),
    ("states", ["states", "--strands", "3", "1212", "--assignment", "ABBA"], 0),
    ("bounds", ["bounds", "5", "7"], 0),
    ("bounds", ["bounds", "4", "8"], 0),
    ("verify-paper", ["verify-paper", "--scan-bound", "30"], 0),
]


class Contract:
    def __init__(self, cli, schemas, fixtures):
        self.cli = cli
        self.schemas = schemas
        self.fixtures = fixtures
        self.failures = 0
        self.checks = 0

    def run(self, argv):
        return subprocess.run([self.cli, *argv], capture_output=True, text=True, timeout=120)

    def expect(self, ok, what):
        self.checks += 1
        if not ok:
            self.failures += 1
            print(f"FAIL {what}")

    def schema_case(self, name, argv, code):
        proc = self.run(["--json", *argv])
        self.expect(proc.returncode == code, f"{argv}: exit {proc.returncode}, wanted {code}")
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            self.expect(False, f"{argv}: stdout is not JSON ({e})")
            return
        schema = json.loads((self.schemas / f"{name}.schema.json").read_text())
        try:
            jsonschema.validate(doc, schema)
            self.expect(True, "")
        except jsonschema.ValidationError as e:
            self.expect(False, f"{argv}: {e.message}")

    def exact_outputs(self):
        proc = self.run(["--json", "width", "4", "5"])
        self.expect(proc.stdout.strip() == '{"delta_max":6,"delta_min":4,"width":3}',
                    f"width 4 5 --json printed {proc.stdout!r}")
        proc = self.run(["alexander", "4", "5"])
        self.expect("t^{-6}-t^{-5}+t^{-2}-1+t^2-t^5+t^6" in proc.stdout,
                    f"alexander 4 5 printed {proc.stdout!r}")
        proc = self.run(["--json", "alexander", "4", "5"])
        terms = {e: c for e, c in json.loads(proc.stdout)["terms"]}
        self.expect(terms == {-6: 1, -5: -1, -2: 1, 0: -1, 2: 1, 5: -1, 6: 1}, "alexander terms")

    def exit_codes(self):
        cases = [
            (["alexander", "4", "6"], 2),  # not coprime
            (["alexander", "0", "3"], 2),
            (["alexander", "4", "6", "--closed-form"], 2),
            (["hfk", "2", "4"], 2),
            (["no-such-command"], 2),
            (["braid-eq", "--strands", "3", "13", "11"], 2),  # generator out of range
            (["braid-eq", "--strands", "3", "1(2", "11"], 2),
            (["states", "--strands", "3", "12", "--assignment", "AAA"], 2),
            (["dalt", "--pd", str(self.fixtures / "edge_once.json")], 2),
            (["dalt", "--pd", str(self.fixtures / "does_not_exist.json")], 2),
            (["turaev-genus", "--pd", str(self.fixtures / "trefoil.json")], 0),
            (["dalt", "--pd", str(self.fixtures / "figure_eight.json")], 0),
            (["scan", "--bound", "30"], 0),
        ]
        for argv, code in cases:
            proc = self.run(argv)
            self.expect(proc.returncode == code, f"{argv}: exit {proc.returncode}, wanted {code}")

    def pd_round_trip(self):
        proc = self.run(["--json", "dalt", "--pd", str(self.fixtures / "figure_eight.json")])
        doc = json.loads(proc.stdout)
        self.expect(doc["minimum_changes"] == 0 and doc["witness_alternates"],
                    "figure eight diagram should already alternate")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    ap.add_argument("--fixtures", required=True, type=pathlib.Path)
    args = ap.parse_args()

    c = Contract(args.cli, args.schemas, args.fixtures)
    for name, argv, code in SCHEMA_CASES:
        c.schema_case(name, argv, code)
    c.exact_outputs()
    c.exit_codes()
    c.pd_round_trip()
    print(f"{c.checks - c.failures}/{c.checks} contract checks passed")
    return 1 if c.failures else 0


if __name__ == "__main__":
    sys.exit(main())
