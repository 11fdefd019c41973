# ABOUTME: Weak-compose command implementation
# ABOUTME: Composes two weak morphisms read from files and validates the composite

from pathlib import Path
from typing import Optional, Tuple

import typer

from cli.config import resolve_settings
from cli.output import INPUT_ERRORS, fail_input, finish
from crossed.errors import ConsistencyError, CrossedError, MalformedInput, NotComposable, ParseError
from crossed.internal import internal_functor
from crossed.parser import StructureLibrary, StructureWriter
from crossed.report import CheckReport
from crossed.structures import CrossedSemiBimodule, WeakMorphism, compose_weak, strictify, validate_weak_morphism


def load_weak(file: str) -> Tuple[str, WeakMorphism, CrossedSemiBimodule, CrossedSemiBimodule]:
    """
    The last weakmorphism or morphism block of FILE with its endpoints

    A strict morphism is read as its strictified weak morphism.
    """
    library = StructureLibrary.from_file(file)
    blocks = [block for block in library.document.blocks if block.kind in ("weakmorphism", "morphism")]
    if not blocks:
        raise ParseError(library.document.path, 0, "no weakmorphism or morphism block in file")
    block = blocks[-1]
    X, Xp = library.endpoints(block)
    if block.kind == "morphism":
        return block.name, strictify(library.morphism(block.name)), X, Xp
    return block.name, library.weakmorphism(block.name), X, Xp


def weak_compose(
    first: str = typer.Argument(..., help="File whose weak morphism is applied first"),
    second: str = typer.Argument(..., help="File whose weak morphism is applied second"),
    emit: Optional[Path] = typer.Option(None, "--emit", help="Directory for the composite"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """Compose SECOND after FIRST and check the composite against the outer structures"""
    settings = resolve_settings()
    report = CheckReport(title="weak-compose")
    try:
        name1, w1, X, middle = load_weak(first)
        report.record(f"weakmorphism {name1}")
        name2, w2, middle2, Xpp = load_weak(second)
        report.record(f"weakmorphism {name2}")
        if middle != middle2:
            raise NotComposable(f"target of {name1} is not the source of {name2}")
        composite = compose_weak(w2, w1)
    except INPUT_ERRORS as e:
        fail_input(e)
    except CrossedError as e:
        report.record("operand", e.witness, passed=False, detail=str(e))
        finish(report, json_output)
        return

    name = f"{name2}_after_{name1}"
    try:
        validate_weak_morphism(composite, X, Xpp, settings.chunk_size)
        report.record(f"composite {name}")
    except CrossedError as e:
        report.record(f"composite {name}", e.witness, passed=False, detail=e.law)

    if report.passed:
        try:
            internal_functor(composite, X, Xpp, settings=settings)
            report.record("composite.internal_functor")
        except ConsistencyError as e:
            report.record("composite.internal_functor", e.witness, passed=False, detail=str(e))

    if emit is not None and report.passed:
        writer = StructureWriter()
        try:
            writer.weakmorphism(composite, name, X, Xpp)
        except MalformedInput as e:
            fail_input(e)
        emit.mkdir(parents=True, exist_ok=True)
        (emit / f"{name}.txt").write_text(writer.text(), encoding="utf-8")
    finish(report, json_output)
