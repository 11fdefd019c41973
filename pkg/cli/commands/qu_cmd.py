# ABOUTME: Qu command implementation
# ABOUTME: Builds and verifies the quadratic example over Z/nZ, singly or over a parameter sweep

import logging
from pathlib import Path
from typing import List, Optional

import typer
from pydantic import ValidationError

from cli.config import resolve_settings
from cli.output import INPUT_ERRORS, fail_input, finish, print_line
from crossed.errors import CrossedError
from crossed.parser import emit_monoid, emit_xbsmod
from crossed.quadratic import build_qu, make_params, parameter_sweep, verify_qu
from crossed.report import CheckReport

logger = logging.getLogger(__name__)


def qu_command(
    n: int = typer.Argument(..., help="Modulus of the coefficient ring Z/nZ"),
    p: int = typer.Argument(..., help="Parameter p"),
    q: int = typer.Argument(..., help="Parameter q, with pq + 2 = 0 mod n"),
    build_cat: bool = typer.Option(False, "--build-cat", help="Also build and verify the internal category"),
    seed: Optional[int] = typer.Option(None, "--seed", min=0, help="Seed for sampled checks"),
    max_c2: Optional[int] = typer.Option(None, "--max-c2", min=1, help="Largest C2 whose associativity is checked exhaustively"),
    emit: Optional[Path] = typer.Option(None, "--emit", help="Directory for the K, A and structure files"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """Build Qu(Z/nZ) for parameters (p, q) and report every check"""
    try:
        settings = resolve_settings(seed, max_c2)
        params = make_params(n, p, q)
    except INPUT_ERRORS + (ValidationError,) as e:
        fail_input(e)

    try:
        report = verify_qu(params, settings, build_cat=build_cat)
    except CrossedError as e:
        report = CheckReport(title=params.label)
        report.record("components", e.witness, passed=False, detail=str(e))

    if emit is not None and report.passed:
        X = build_qu(params, settings)
        emit.mkdir(parents=True, exist_ok=True)
        (emit / f"{X.K.name}.txt").write_text(emit_monoid(X.K), encoding="utf-8")
        (emit / f"{X.A.name}.txt").write_text(emit_monoid(X.A), encoding="utf-8")
        (emit / f"{X.name}.txt").write_text(emit_xbsmod(X), encoding="utf-8")
        logger.info("wrote %s to %s", X.name, emit)

    sizes = {"C0": n**2, "C1": n**4, "C2": n**6} if build_cat else {}
    if not json_output:
        for label, size in sizes.items():
            print_line(f"|{label}|={size}")
    finish(report, json_output, {"params": params.model_dump(), "sizes": sizes})


def qu_sweep(
    moduli: List[int] = typer.Option([2, 3, 4, 6], "--n", min=1, help="Modulus to sweep (repeatable)"),
    build_cat: bool = typer.Option(False, "--build-cat", help="Also build and verify each internal category"),
    seed: Optional[int] = typer.Option(None, "--seed", min=0, help="Seed for sampled checks"),
    max_c2: int = typer.Option(64, "--max-c2", min=1, help="Largest C2 whose associativity is checked exhaustively (64: only n = 2)"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """Verify Qu(Z/nZ) for every admissible (p, q) of every modulus given"""
    try:
        settings = resolve_settings(seed, max_c2)
    except ValidationError as e:
        fail_input(e)

    report = CheckReport(title="qu-sweep")
    for params in parameter_sweep(moduli):
        try:
            report.extend(verify_qu(params, settings, build_cat=build_cat), prefix=f"{params.label}.")
        except CrossedError as e:
            report.record(f"{params.label}.components", e.witness, passed=False, detail=str(e))
    finish(report, json_output)
