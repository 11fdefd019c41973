# ABOUTME: Catalog command implementation
# ABOUTME: Lists the built-in monoids that enumerate and classify accept by name

import typer

from cli.output import print_catalog, print_json
from crossed.catalog import get_catalog
from crossed.monoid import is_commutative, is_group


def list_catalog(
    json_output: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """List the built-in monoids"""
    entries = get_catalog().entries()

    if json_output:
        print_json(
            {
                "monoids": [
                    {
                        "name": entry.name,
                        "order": entry.monoid.size,
                        "group": is_group(entry.monoid),
                        "commutative": is_commutative(entry.monoid),
                        "description": entry.description,
                    }
                    for entry in entries
                ]
            }
        )
    else:
        print_catalog(entries)
