"""CLI cases shared by the pytest suite and the acceptance binary.

Run as a script: cli_cases.py CLI SCHEMA_DIR. Exit status 0 when every case
produces schema-valid JSON, the expected exit code and byte-identical reruns.
"""
import json
import pathlib
import re
import subprocess
import sys

import jsonschema

# (command, args, expected exit code)
CASES = [
    ("is-auto", ["x+y^2", "y"], 0),
    ("is-auto", ["x", "x*y"], 1),
    ("decompose", ["x+y^2", "y+1"], 0),
    ("decompose", ["x", "y^2"], 1),
    ("jacobian", ["x+y^2", "x*y"], 0),
    ("jacobian", ["-x^3 + y", "-y"], 0),
    ("is-coordinate-witness", ["3"], 0),
    ("verify-retract", ["x^2*y", "1", "z"], 0),
    ("verify-retract", ["x^2*y", "z", "1"], 1),
    ("find-retract", ["x^2*y", "--max-deg", "2"], 0),
    ("find-retract", ["x^2"], 1),
    ("find-retract", ["x*y + (x + x^5*y^5)^2", "--max-deg", "2"], 1),
    ("make-retract", ["x*y", "--sigma", '[{"elemX":"y^2"}]'], 0),
    ("make-retract", ["1/2*x - y^2"], 0),
    ("generates-kz", ["z^2+z", "z^2", "--bound", "4"], 0),
    ("generates-kz", ["z^2", "z^3", "--bound", "12"], 1),
    ("normalize", ["x+x*y", "y", "--h1", "x"], 0),
    ("normalize", ["x", "x^2", "--h1", "0"], 1),
    ("witness", ["--h1", "x", "--h2", "1"], 0),
    ("witness", ["--m", "3"], 0),
    ("reduce", ["x+y^2", "y"], 0),
    ("reduce", ["x", "x*y"], 1),
    ("reduce", ["x + y^3", "y + (x + y^3)^2"], 0),
    ("experiment", ["--seed", "7", "--trials", "50"], 0),
    ("experiment", ["--seed", "11", "--trials", "5", "--max-deg", "3"], 0),
    ("nc-verify", ["x+y^2", "z", "0"], 0),
    ("nc-verify", ["x+y^2", "z", "0", "--field", "fp:5"], 0),
]

# Usage and input errors: exit 2, nothing on stdout.
ERRORS = [
    ["is-auto", "x+", "y"],
    ["is-auto", "x*z", "y"],
    ["jacobian", "xy", "y"],
    ["nc-verify", "x+y", "z", "z"],
    ["make-retract", "x", "--sigma", "[{"],
    ["nc-verify", "x", "z", "0", "--field", "fp:6"],
    ["no-such-command"],
]


def schema_dir_default():
    return pathlib.Path(__file__).resolve().parents[2] / "schemas"


def run(cli, argv):
    return subprocess.run([str(cli), *argv], capture_output=True, text=True, timeout=120)


def load_schema(schema_dir, command):
    return json.loads((pathlib.Path(schema_dir) / f"{command}.schema.json").read_text())


def check_case(cli, schema_dir, command, args, code):
    """Returns a list of problems, empty when the case passes."""
    problems = []
    first = run(cli, [command, *args])
    if first.returncode != code:
        problems.append(f"exit {first.returncode}, expected {code}: {first.stderr.strip()}")
    lines = first.stdout.splitlines()
    # experiment appends its "ok: K/N" summary after the JSON line.
    want = 2 if command == "experiment" else 1
    if len(lines) != want or not first.stdout.endswith("\n"):
        problems.append(f"expected {want} newline-terminated lines, got {len(lines)}")
    elif want == 2 and not re.fullmatch(r"ok: \d+/\d+", lines[1]):
        problems.append(f"bad summary line {lines[1]!r}")
    else:
        try:
            jsonschema.validate(json.loads(lines[0]), load_schema(schema_dir, command))
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            problems.append(f"schema: {str(e).splitlines()[0]}")
    second = run(cli, [command, *args])
    if second.stdout != first.stdout or second.returncode != first.returncode:
        problems.append("rerun differs")
    serial = run(cli, ["--serial", command, *args])
    if serial.stdout != first.stdout:
        problems.append("serial run differs")
    return problems


def check_error(cli, argv):
    r = run(cli, argv)
    problems = []
    if r.returncode != 2:
        problems.append(f"exit {r.returncode}, expected 2")
    if r.stdout:
        problems.append("unexpected stdout")
    if not r.stderr:
        problems.append("no message on stderr")
    return problems


def main(argv):
    if len(argv) < 2:
        print("usage: cli_cases.py CLI [SCHEMA_DIR]", file=sys.stderr)
        return 2
    cli = argv[1]
    schema_dir = argv[2] if len(argv) > 2 else schema_dir_default()
    for path in pathlib.Path(schema_dir).glob("*.schema.json"):
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))
    failed = 0
    for command, args, code in CASES:
        for p in check_case(cli, schema_dir, command, args, code):
            failed += 1
            print(f"{command} {' '.join(args)}: {p}")
    for argv_e in ERRORS:
        for p in check_error(cli, argv_e):
            failed += 1
            print(f"{' '.join(argv_e)}: {p}")
    print(f"{len(CASES)} cases, {len(ERRORS)} error cases, {failed} problems")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
