import os

import pytest

import cli_cases

CLI = os.environ.get("RETRACTLAB_CLI", "build/retractlab")


@pytest.mark.parametrize("command,args,code", cli_cases.CASES, ids=lambda v: v if isinstance(v, str) else None)
def test_case(command, args, code):
    assert cli_cases.check_case(CLI, cli_cases.schema_dir_default(), command, args, code) == []


@pytest.mark.parametrize("argv", cli_cases.ERRORS, ids=lambda a: " ".join(a))
def test_usage_error(argv):
    assert cli_cases.check_error(CLI, argv) == []


def test_experiment_summary_line():
    r = cli_cases.run(CLI, ["--text", "experiment", "--seed", "7", "--trials", "50"])
    assert r.returncode == 0
    assert "ok: 50/50" in r.stdout.splitlines()
    j = cli_cases.run(CLI, ["experiment", "--seed", "7", "--trials", "50"])
    assert j.stdout.splitlines()[1] == "ok: 50/50"


def test_parse_error_position():
    r = cli_cases.run(CLI, ["is-auto", "x+", "y"])
    assert "line 1, column 3" in r.stderr
