# ABOUTME: Tests for the enumerate and classify CLI commands
# ABOUTME: Validates counts, JSON output, emitted files and input errors

import json
from unittest.mock import patch

import typer
from typer.testing import CliRunner

from cli.commands.classify_cmd import classify_command
from cli.commands.enumerate_cmd import enumerate_command
from crossed.errors import ConsistencyError
from crossed.parser import StructureLibrary


runner = CliRunner()

_test_app = typer.Typer()
_test_app.command()(enumerate_command)

_test_classify_app = typer.Typer()
_test_classify_app.command()(classify_command)


def test_enumerate_xbsmods():
    """Test the summary table for (Z/2, Z/2)"""
    result = runner.invoke(_test_app, ["--A", "z2", "--K", "z2"])

    assert result.exit_code == 0
    assert "xbsmod" in result.stdout
    assert "2" in result.stdout


def test_enumerate_json():
    """Test JSON output lists the structure names in order"""
    result = runner.invoke(_test_app, ["--A", "z2", "--K", "z2", "--json"])

    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["count"] == 2
    assert payload["structures"] == ["z2_z2_0", "z2_z2_1"]


def test_enumerate_xmods_json():
    """Test that --kind selects crossed modules"""
    result = runner.invoke(_test_app, ["--A", "z2", "--K", "z2", "--kind", "xmod", "--json"])

    assert result.exit_code == 0
    assert json.loads(result.stdout)["count"] == 2


def test_enumerate_show_prints_files():
    """Test that --show prints every structure in file format"""
    result = runner.invoke(_test_app, ["--A", "z2", "--K", "z2", "--show"])

    assert result.exit_code == 0
    assert "xbsmod z2_z2_0 A=z2 K=z2" in result.stdout
    assert "xbsmod z2_z2_1 A=z2 K=z2" in result.stdout


def test_enumerate_emit(tmp_path):
    """Test that every structure is written to a readable file"""
    out = tmp_path / "out"

    result = runner.invoke(_test_app, ["--A", "z2", "--K", "z2", "--emit", str(out)])

    assert result.exit_code == 0
    assert sorted(p.name for p in out.iterdir()) == ["z2_z2_0.txt", "z2_z2_1.txt"]
    X = StructureLibrary.from_file(str(out / "z2_z2_1.txt")).xbsmod("z2_z2_1")
    assert X.circ.table.tolist() == [[0, 1], [1, 0]]


def test_enumerate_unknown_monoid():
    """Test that an unknown catalog name is an input error"""
    result = runner.invoke(_test_app, ["--A", "z7", "--K", "z2"])

    assert result.exit_code == 2
    assert "z7" in result.stdout


def test_enumerate_xmods_on_non_group():
    """Test that crossed modules on a non-group are refused"""
    result = runner.invoke(_test_app, ["--A", "u2", "--K", "z2", "--kind", "xmod"])

    assert result.exit_code == 2


def test_enumerate_above_cap():
    """Test that the order cap is enforced"""
    result = runner.invoke(_test_app, ["--A", "z5", "--K", "z2"])

    assert result.exit_code == 2


def test_enumerate_budget():
    """Test that an exhausted node budget is an input error"""
    result = runner.invoke(_test_app, ["--A", "z2", "--K", "z2", "--budget", "1"])

    assert result.exit_code == 2
    assert "budget" in result.stdout


def test_classify_group_pair():
    """Test classification counts and cross-checks on (Z/2, Z/2)"""
    result = runner.invoke(_test_classify_app, ["--A", "z2", "--K", "z2", "--json"])

    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["summary"]["total"] == 2
    assert payload["summary"]["circ_constant"] == 1
    assert payload["passed"] is True


def test_classify_table():
    """Test the human-readable classification"""
    result = runner.invoke(_test_classify_app, ["--A", "u2", "--K", "z2", "--strict"])

    assert result.exit_code == 0
    assert "lambda_trivial=phi(xsmod): PASS" in result.stdout


def test_classify_consistency_failure_is_a_fail_line():
    """Test that a broken construction guarantee is reported, not raised"""
    with patch("cli.commands.classify_cmd.classify") as mock_classify:
        mock_classify.side_effect = ConsistencyError("x⋄x♭ = 1 fails", (1,))
        result = runner.invoke(_test_classify_app, ["--A", "z2", "--K", "z2"])

    assert result.exit_code == 1
    assert result.exception is None or isinstance(result.exception, SystemExit)
    assert "classify: FAIL (1) consistency" in result.stdout
