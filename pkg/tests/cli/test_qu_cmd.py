# ABOUTME: Tests for the qu and qu-sweep CLI commands
# ABOUTME: Validates sizes, determinism, emitted files and parameter errors

import json

import typer
from typer.testing import CliRunner

from cli.commands.qu_cmd import qu_command, qu_sweep
from crossed.parser import StructureLibrary


runner = CliRunner()

_test_app = typer.Typer()
_test_app.command()(qu_command)

_test_sweep_app = typer.Typer()
_test_sweep_app.command()(qu_sweep)


def test_qu_builds_category():
    """Test the sizes printed for n = 2"""
    result = runner.invoke(_test_app, ["2", "0", "0", "--build-cat"])

    assert result.exit_code == 0
    assert "|C0|=4" in result.stdout
    assert "|C1|=16" in result.stdout
    assert "|C2|=64" in result.stdout
    assert "xbsmod: PASS" in result.stdout


def test_qu_is_deterministic():
    """Test that two runs print identical reports"""
    first = runner.invoke(_test_app, ["2", "0", "0", "--build-cat"])
    second = runner.invoke(_test_app, ["2", "0", "0", "--build-cat"])

    assert first.stdout == second.stdout


def test_qu_without_category():
    """Test that only the structure is checked by default"""
    result = runner.invoke(_test_app, ["2", "1", "0", "--json"])

    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["params"] == {"n": 2, "p": 1, "q": 0}
    assert payload["sizes"] == {}


def test_qu_emit(tmp_path):
    """Test that K, A and the structure are written"""
    out = tmp_path / "out"

    result = runner.invoke(_test_app, ["2", "0", "0", "--emit", str(out)])

    assert result.exit_code == 0
    assert sorted(p.name for p in out.iterdir()) == ["A2_0.txt", "K2.txt", "qu_2_0_0.txt"]
    X = StructureLibrary.from_file(str(out / "qu_2_0_0.txt")).xbsmod("qu_2_0_0")
    assert X.A.size == 4


def test_qu_constraint_violated():
    """Test that pq + 2 != 0 mod n is an input error"""
    result = runner.invoke(_test_app, ["3", "0", "0"])

    assert result.exit_code == 2
    assert "pq + 2 = 2" in result.stdout


def test_qu_zero_modulus():
    """Test that n must be positive"""
    result = runner.invoke(_test_app, ["0", "0", "0"])

    assert result.exit_code == 2


def test_qu_sweep_single_modulus():
    """Test that every admissible (p, q) of n = 2 is verified"""
    result = runner.invoke(_test_sweep_app, ["--n", "2"])

    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "qu_2_0_0.xbsmod: PASS",
        "qu_2_0_1.xbsmod: PASS",
        "qu_2_1_0.xbsmod: PASS",
    ]
