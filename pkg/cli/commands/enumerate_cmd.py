# ABOUTME: Enumerate command implementation
# ABOUTME: Lists every crossed structure of one kind on two catalog monoids

from pathlib import Path
from typing import List, Optional

import typer
from pydantic import ValidationError

from cli.config import resolve_settings
from cli.output import INPUT_ERRORS, console, fail_input, print_json, print_summary
from crossed.catalog import get_catalog
from crossed.errors import CrossedError, NotAGroup
from crossed.models import EnumerationTask, StructureKind
from crossed.parser import emit_xbsmod, emit_xmod, emit_xsmod
from crossed.search import Structure, enumerate_structures


def emit_structure(structure: Structure, kind: StructureKind) -> str:
    """Self-contained file text for one enumerated structure"""
    if kind == StructureKind.XBSMOD:
        return emit_xbsmod(structure)  # type: ignore[arg-type]
    if kind == StructureKind.XSMOD:
        return emit_xsmod(structure)  # type: ignore[arg-type]
    return emit_xmod(structure)  # type: ignore[arg-type]


def load_task(a_name: str, k_name: str, kind: StructureKind, budget: Optional[int]) -> EnumerationTask:
    """Resolve catalog names into a capped enumeration task"""
    settings = resolve_settings()
    catalog = get_catalog()
    return EnumerationTask(
        A=catalog.get(a_name),
        K=catalog.get(k_name),
        kind=kind,
        max_order=settings.max_enumeration_order,
        node_budget=budget or settings.node_budget,
    )


def enumerate_command(
    a_name: str = typer.Option(..., "--A", help="Catalog name of the monoid A"),
    k_name: str = typer.Option(..., "--K", help="Catalog name of the monoid K"),
    kind: StructureKind = typer.Option(StructureKind.XBSMOD, "--kind", help="Structure kind"),
    budget: Optional[int] = typer.Option(None, "--budget", min=1, help="Backtracking node budget"),
    emit: Optional[Path] = typer.Option(None, "--emit", help="Directory for one file per structure"),
    show: bool = typer.Option(False, "--show", help="Print every structure in file format"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """Enumerate all structures of KIND on (A, K), in a fixed order"""
    try:
        task = load_task(a_name, k_name, kind, budget)
        structures: List[Structure] = enumerate_structures(task)
    except INPUT_ERRORS + (NotAGroup, ValidationError) as e:
        fail_input(e)
    except CrossedError as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(1)

    if emit is not None:
        emit.mkdir(parents=True, exist_ok=True)
        for structure in structures:
            (emit / f"{structure.name}.txt").write_text(emit_structure(structure, kind), encoding="utf-8")

    if json_output:
        print_json(
            {
                "A": task.A.name,
                "K": task.K.name,
                "kind": kind.value,
                "count": len(structures),
                "structures": [structure.name for structure in structures],
            }
        )
        return

    print_summary([(task.A.size, task.K.size, kind.value, len(structures))])
    if show:
        for structure in structures:
            console.out(emit_structure(structure, kind), end="", highlight=False)
