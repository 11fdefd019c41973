# ABOUTME: Tests for the check CLI command
# ABOUTME: Validates report lines and exit codes on structure files

import json

import typer
from typer.testing import CliRunner

from cli.commands.check_cmd import check_file


runner = CliRunner()

_test_app = typer.Typer()
_test_app.command()(check_file)


def test_check_valid_file(phi_file):
    """Test that a valid file passes with one line per block"""
    result = runner.invoke(_test_app, [str(phi_file)])

    assert result.exit_code == 0
    assert "xbsmod phi: PASS" in result.stdout
    assert "monoid z2: PASS" in result.stdout


def test_check_failing_block(tmp_path):
    """Test that a block violating a law gives exit status 1"""
    path = tmp_path / "bad.txt"
    path.write_text("action left z2 z2 bad\n0 1\n1 1\n", encoding="utf-8")

    result = runner.invoke(_test_app, [str(path)])

    assert result.exit_code == 1
    assert "action bad: FAIL" in result.stdout


def test_check_missing_file(tmp_path):
    """Test that an unreadable file is an input error"""
    result = runner.invoke(_test_app, [str(tmp_path / "absent.txt")])

    assert result.exit_code == 2
    assert "Error:" in result.stdout


def test_check_parse_error(tmp_path):
    """Test that a malformed file is an input error"""
    path = tmp_path / "broken.txt"
    path.write_text("0 1\n", encoding="utf-8")

    result = runner.invoke(_test_app, [str(path)])

    assert result.exit_code == 2
    assert "index row before any header" in result.stdout


def test_check_json_output(phi_file):
    """Test JSON output of the report"""
    result = runner.invoke(_test_app, [str(phi_file), "--json"])

    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["passed"] is True
    assert len(payload["results"]) == 5
