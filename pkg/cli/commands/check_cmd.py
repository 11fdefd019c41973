# ABOUTME: Check command implementation
# ABOUTME: Validates every block of a structure file and prints one line per block

import typer

from cli.output import fail_input, finish
from crossed.errors import ParseError
from crossed.parser import StructureLibrary, check_document


def check_file(
    file: str = typer.Argument(..., help="Structure file to validate"),
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """
    Validate monoids, actions, homomorphisms, structures and morphisms in FILE

    Names not defined in FILE are looked up in the other files of its
    directory and, for monoids, in the built-in catalog.
    """
    try:
        library = StructureLibrary.from_file(file)
        report = check_document(library)
    except ParseError as e:
        fail_input(e)

    finish(report, json_output)
