# ABOUTME: Output formatting utilities
# ABOUTME: Handles report lines, table rendering, JSON output and exit codes

import json
from typing import Any, Dict, List, NoReturn, Sequence, Tuple

import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table
from rich.text import Text

from crossed.catalog import CatalogEntry
from crossed.errors import (
    BudgetExceeded,
    ConstraintViolated,
    CrossedError,
    IndexOutOfRange,
    MalformedInput,
    NotComposable,
    ParseError,
    UnknownMonoid,
)
from crossed.monoid import is_commutative, is_group
from crossed.report import CheckReport

console = Console()

# Rejections caused by the input itself rather than by a failed law
INPUT_ERRORS = (ParseError, MalformedInput, IndexOutOfRange, UnknownMonoid, ConstraintViolated, BudgetExceeded, NotComposable)


def print_json(data: Any):
    """
    Print data as formatted JSON

    Args:
        data: Data to output as JSON (will be serialized)
    """
    console.print_json(json.dumps(data))


def print_line(line: str, style: str = ""):
    """Print one line verbatim (no markup, no wrapping)"""
    console.print(Text(line, style=style), soft_wrap=True)


def print_report(report: CheckReport):
    """
    Print one line per check, PASS in green and FAIL in red

    Args:
        report: Report whose lines are printed in order
    """
    for result in report.results:
        print_line(result.line(), "green" if result.passed else "red")


def fail_input(error: Exception) -> NoReturn:
    """Report an input error and exit with status 2"""
    console.print(f"[red]Error:[/red] {escape(str(error))}", soft_wrap=True)
    raise typer.Exit(2)


def finish(report: CheckReport, json_output: bool = False, extra: Dict[str, Any] | None = None) -> None:
    """Print the report and exit with status 1 when any check failed"""
    if json_output:
        payload = {"passed": report.passed, **(extra or {}), **report.model_dump()}
        print_json(payload)
    else:
        print_report(report)
    if not report.passed:
        raise typer.Exit(1)


def record_error(report: CheckReport, label: str, error: CrossedError) -> None:
    """Turn a law rejection into a FAIL line; input errors exit with status 2"""
    if isinstance(error, INPUT_ERRORS):
        fail_input(error)
    report.record(label, error.witness, passed=False, detail=error.law)


def print_catalog(entries: List[CatalogEntry]):
    """
    Print the built-in monoids as a table

    Args:
        entries: Catalog entries in catalog order
    """
    table = Table(title=f"Built-in Monoids (Count: {len(entries)})")
    table.add_column("Name", style="cyan")
    table.add_column("Order", style="yellow")
    table.add_column("Group", style="green")
    table.add_column("Commutative", style="green")
    table.add_column("Description", style="white")

    for entry in entries:
        table.add_row(
            entry.name,
            str(entry.monoid.size),
            "yes" if is_group(entry.monoid) else "no",
            "yes" if is_commutative(entry.monoid) else "no",
            entry.description,
        )

    console.print(table)


def print_summary(rows: Sequence[Tuple[int, int, str, int]], title: str = "Enumeration Summary"):
    """
    Print (|A|, |K|, kind) -> count rows

    Args:
        rows: (order of A, order of K, kind, count)
    """
    table = Table(title=title)
    table.add_column("|A|", style="cyan")
    table.add_column("|K|", style="cyan")
    table.add_column("Kind", style="yellow")
    table.add_column("Count", style="green")

    for order_a, order_k, kind, count in rows:
        table.add_row(str(order_a), str(order_k), kind, str(count))

    console.print(table)


def print_counts(counts: Dict[str, int], title: str):
    """
    Print a two-column table of named counts

    Args:
        counts: Class name to number of structures
        title: Table title
    """
    table = Table(title=title)
    table.add_column("Class", style="cyan")
    table.add_column("Count", style="green")

    for name, count in counts.items():
        table.add_row(name, str(count))

    console.print(table)
