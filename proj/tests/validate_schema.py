"""Runs each CLI command once and validates its JSON against the shipped schema."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["invariants", "-p", "67", "-a", "5", "-b", "7"],
    ["invariants", "-p", "5", "-q", "2", "-a", "2", "-b", "3"],
    ["lfunction", "-p", "5", "-a", "2", "-b", "3", "--oracle-check"],
    ["lfunction", "-p", "3", "-r", "40", "-a", "2", "-b", "5"],
    ["scan", "-p", "5", "-a", "2", "-b", "11", "--q-exps", "1,2"],
    ["--orbit-budget", "100", "scan", "-p", "5", "-a", "2", "-b", "3", "--q-exps", "1,3"],
    ["find-pairs", "-p", "67", "--limit", "10"],
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in RUNS:
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        if proc.returncode not in (0, 4):
            print(f"{' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for err in errors:
            print(f"{' '.join(args)}: {err.json_path}: {err.message}")
        failures += bool(errors)
        print(f"{' '.join(args)}: {'ok' if not errors else 'INVALID'}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
