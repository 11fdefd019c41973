# ABOUTME: Classify command implementation
# ABOUTME: Partitions the crossed semi-bimodules on (A, K) and cross-checks the bijections

import typer
from pydantic import ValidationError

from cli.commands.enumerate_cmd import load_task
from cli.config import resolve_settings
from cli.output import INPUT_ERRORS, console, fail_input, finish, print_counts, record_error
from crossed.errors import CrossedError, MismatchWitness
from crossed.models import StructureKind
from crossed.report import CheckReport
from crossed.search import classify, enumerate_structures


def classify_command(
    a_name: str = typer.Option(..., "--A", help="Catalog name of the monoid A"),
    k_name: str = typer.Option(..., "--K", help="Catalog name of the monoid K"),
    strict: bool = typer.Option(False, "--strict", help="Stop at the first one-sided structure"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """Count the lambda-trivial, circ-constant and group-case structures on (A, K)"""
    try:
        task = load_task(a_name, k_name, StructureKind.XBSMOD, None)
        structures = enumerate_structures(task)
    except INPUT_ERRORS + (ValidationError,) as e:
        fail_input(e)

    try:
        result = classify(structures, task.A, task.K, resolve_settings(), strict=strict)  # type: ignore[arg-type]
    except MismatchWitness as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(1)
    except CrossedError as e:
        report = CheckReport(title=f"classify {a_name} {k_name}")
        record_error(report, "classify", e)
        finish(report, json_output)
        return

    if not json_output:
        print_counts(result.summary(), title=f"Crossed semi-bimodules on ({result.A}, {result.K})")
    finish(result.checks, json_output, {"summary": result.summary()})
