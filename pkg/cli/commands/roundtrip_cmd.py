# ABOUTME: Roundtrip-group command implementation
# ABOUTME: Passes a group-case structure through crossed modules and back

from dataclasses import replace
from pathlib import Path
from typing import Optional

import typer

from cli.config import resolve_settings
from cli.output import INPUT_ERRORS, fail_input, finish
from crossed.errors import CrossedError, ParseError
from crossed.parser import StructureLibrary, StructureWriter
from crossed.report import CheckReport
from crossed.structures import CrossedModule, canonical_weak_iso, group_to_xmod, xmod_to_xbsmod


def _last_group_block(library: StructureLibrary):
    blocks = [block for block in library.document.blocks if block.kind in ("xbsmod", "xmod")]
    if not blocks:
        raise ParseError(library.document.path, 0, "no xbsmod or xmod block in file")
    return blocks[-1]


def roundtrip_group(
    file: str = typer.Argument(..., help="Structure file ending in an xbsmod or xmod over groups"),
    emit: Optional[Path] = typer.Option(None, "--emit", help="Directory for the crossed module and its weak isomorphism"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """
    Check group_to_xmod(xmod_to_xbsmod(M)) = M and the canonical weak isomorphism

    For an xbsmod X the crossed module is M = group_to_xmod(X); for an xmod
    block it is the crossed module itself.
    """
    chunk = resolve_settings().chunk_size
    try:
        library = StructureLibrary.from_file(file)
        block = _last_group_block(library)
    except ParseError as e:
        fail_input(e)

    report = CheckReport(title=f"roundtrip-group {block.name}")
    M: Optional[CrossedModule] = None
    X = None
    try:
        if block.kind == "xmod":
            M = library.xmod(block.name)
            report.record(f"xmod {block.name}")
        else:
            X = library.xbsmod(block.name)
            report.record(f"xbsmod {block.name}")
            M = group_to_xmod(X, chunk)
            report.record("group_to_xmod")
    except INPUT_ERRORS as e:
        fail_input(e)
    except CrossedError as e:
        report.record(f"{block.kind} {block.name}" if M is None and X is None else "group_to_xmod", e.witness, passed=False, detail=e.law)
        finish(report, json_output)
        return

    writer = StructureWriter()
    try:
        image = xmod_to_xbsmod(M, chunk)
        back = group_to_xmod(image, chunk)
        report.record("xmod_roundtrip", passed=back == M, detail="" if back == M else "group_to_xmod(xmod_to_xbsmod(M)) differs from M")
        base = X if X is not None else replace(image, name=block.name)
        iso = canonical_weak_iso(base, chunk)
        report.record("canonical_weak_iso")
        twisted = replace(iso.twisted, name=f"{block.name}_tw")
        writer.xmod(replace(M, name=f"{block.name}_xmod"))
        writer.weakmorphism(iso.forward, f"{block.name}_forward", twisted, base)
        writer.weakmorphism(iso.backward, f"{block.name}_backward", base, twisted)
    except CrossedError as e:
        report.record("canonical_weak_iso", e.witness, passed=False, detail=str(e))

    if emit is not None and report.passed:
        emit.mkdir(parents=True, exist_ok=True)
        (emit / f"{block.name}_roundtrip.txt").write_text(writer.text(), encoding="utf-8")
    finish(report, json_output)
