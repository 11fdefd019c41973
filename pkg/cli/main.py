# ABOUTME: CLI entry point and main application setup
# ABOUTME: Defines Typer app and registers one command per verb

from typing import Optional

import typer

from cli.commands.catalog_cmd import list_catalog
from cli.commands.category_cmd import build_category
from cli.commands.check_cmd import check_file
from cli.commands.classify_cmd import classify_command
from cli.commands.enumerate_cmd import enumerate_command
from cli.commands.qu_cmd import qu_command, qu_sweep
from cli.commands.roundtrip_cmd import roundtrip_group
from cli.commands.weak_cmd import weak_compose
from cli.config import configure_logging

app = typer.Typer(
    name="crossed",
    help="Verify crossed semi-bimodules, their internal categories and related structures",
    no_args_is_help=True,
)


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Logging level (logs go to stderr)"),
):
    """Exit status: 0 when every check passes, 1 on any FAIL, 2 on input errors"""
    configure_logging(log_level)


app.command(name="check", help="Validate every block of a structure file")(check_file)
app.command(name="build-cat", help="Build and verify the internal category of a crossed semi-bimodule")(build_category)
app.command(name="enumerate", help="Enumerate structures on two catalog monoids")(enumerate_command)
app.command(name="classify", help="Partition and cross-check the structures on two catalog monoids")(classify_command)
app.command(name="qu", help="Build and verify the quadratic example over Z/nZ")(qu_command)
app.command(name="qu-sweep", help="Verify the quadratic example for every admissible parameter")(qu_sweep)
app.command(name="roundtrip-group", help="Round-trip a group-case structure through crossed modules")(roundtrip_group)
app.command(name="weak-compose", help="Compose two weak morphisms")(weak_compose)
app.command(name="catalog", help="List the built-in monoids")(list_catalog)


if __name__ == "__main__":
    app()
