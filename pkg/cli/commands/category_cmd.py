# ABOUTME: Build-cat command implementation
# ABOUTME: Builds the internal category of a crossed semi-bimodule and verifies it

import logging
from pathlib import Path
from typing import Optional

import typer

from cli.config import resolve_settings
from cli.output import fail_input, finish, print_line, record_error
from crossed.errors import CrossedError
from crossed.internal import assemble_internal_category, materialize_category, verify_internal_category
from crossed.parser import StructureLibrary, emit_monoid
from crossed.report import CheckReport

logger = logging.getLogger(__name__)


def build_category(
    file: str = typer.Argument(..., help="Structure file holding an xbsmod block"),
    name: Optional[str] = typer.Option(None, "--name", help="xbsmod to use (default: the last one in FILE)"),
    seed: Optional[int] = typer.Option(None, "--seed", min=0, help="Seed for sampled checks"),
    max_c2: Optional[int] = typer.Option(None, "--max-c2", min=1, help="Largest C2 whose associativity is checked exhaustively"),
    emit: Optional[Path] = typer.Option(None, "--emit", help="Directory for the C0, C1, C2 monoid files"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """Build C0, C1 and C2, then check homomorphisms, simplicial identities and the pullback"""
    try:
        settings = resolve_settings(seed, max_c2)
        library = StructureLibrary.from_file(file)
        structure = name or library.last("xbsmod").name
    except (CrossedError, ValueError) as e:
        fail_input(e)

    report = CheckReport(title=f"build-cat {structure}")
    try:
        X = library.xbsmod(structure)
    except CrossedError as e:
        record_error(report, f"xbsmod {structure}", e)
        finish(report, json_output)
        return
    report.record(f"xbsmod {structure}")

    category = assemble_internal_category(X, settings)
    sizes = {"C0": category.C0.size, "C1": category.C1.size, "C2": category.C2.size}
    report.extend(verify_internal_category(category, settings))
    if category.C1.size <= settings.max_c2:
        report.extend(materialize_category(category).report)
    else:
        logger.warning("skipping category laws: |C1|=%d exceeds max_c2=%d", category.C1.size, settings.max_c2)

    if emit is not None:
        emit.mkdir(parents=True, exist_ok=True)
        for monoid in (category.C0, category.C1, category.C2):
            if not monoid.tabulated:
                logger.warning("not emitting %s: it is not tabulated", monoid.name)
                continue
            (emit / f"{monoid.name}.txt").write_text(emit_monoid(monoid), encoding="utf-8")

    if not json_output:
        for label, size in sizes.items():
            print_line(f"|{label}|={size}")
    finish(report, json_output, {"sizes": sizes})
