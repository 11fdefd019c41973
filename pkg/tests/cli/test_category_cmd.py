# ABOUTME: Tests for the build-cat CLI command
# ABOUTME: Validates sizes, the verification report and emitted monoid files

import json

import typer
from typer.testing import CliRunner

from cli.commands.category_cmd import build_category
from crossed.parser import StructureLibrary


runner = CliRunner()

_test_app = typer.Typer()
_test_app.command()(build_category)


def test_build_category_reports_sizes(phi_file):
    """Test that the three monoid sizes and every check are printed"""
    result = runner.invoke(_test_app, [str(phi_file)])

    assert result.exit_code == 0
    assert "|C0|=2" in result.stdout
    assert "|C1|=4" in result.stdout
    assert "|C2|=8" in result.stdout
    assert "pullback: PASS" in result.stdout
    assert "category.associativity: PASS" in result.stdout


def test_build_category_json(phi_file):
    """Test JSON output carries the sizes"""
    result = runner.invoke(_test_app, [str(phi_file), "--json"])

    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["sizes"] == {"C0": 2, "C1": 4, "C2": 8}
    assert payload["passed"] is True


def test_build_category_emits_monoids(phi_file, tmp_path):
    """Test that C0, C1 and C2 are written as monoid files"""
    out = tmp_path / "out"

    result = runner.invoke(_test_app, [str(phi_file), "--emit", str(out)])

    assert result.exit_code == 0
    assert sorted(p.name for p in out.iterdir()) == ["phi_C1.txt", "phi_C2.txt", "z2.txt"]
    C1 = StructureLibrary.from_file(str(out / "phi_C1.txt")).monoid("phi_C1")
    assert C1.size == 4


def test_build_category_sampled_regime(phi_file):
    """Test that a low threshold still passes"""
    result = runner.invoke(_test_app, [str(phi_file), "--max-c2", "4", "--seed", "3"])

    assert result.exit_code == 0
    assert "|C2|=8" in result.stdout


def test_build_category_unknown_name(phi_file):
    """Test that a missing xbsmod name is an input error"""
    result = runner.invoke(_test_app, [str(phi_file), "--name", "nope"])

    assert result.exit_code == 2


def test_build_category_invalid_structure(tmp_path):
    """Test that an xbsmod failing an axiom gives exit status 1"""
    path = tmp_path / "bad.txt"
    path.write_text(
        "action set z2 u2 c\n0 1\n1 0\n"
        "action left u2 z2 l\n0 1\n0 1\n"
        "action right u2 z2 r\n0 1\n0 1\n"
        "xbsmod X A=u2 K=z2 circ=c lambda=l rho=r\n",
        encoding="utf-8",
    )

    result = runner.invoke(_test_app, [str(path)])

    assert result.exit_code == 1
    assert "xbsmod X: FAIL (1, 0, 1) axiom 2" in result.stdout
