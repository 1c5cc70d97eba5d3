"""Command-line interface: JSON documents on stdout, summaries and logs on stderr."""

from fractions import Fraction
from pathlib import Path
from typing import Optional

import click

from ..services.command_runner import CommandResult, CommandRunner
from ..services.serializers import dumps
from ..services.settings import Settings, configure_logging
from .report_view import ReportView


def _fraction(ctx: click.Context, param: click.Parameter, value: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"not a rational number: {value}")


@click.group()
@click.option("-v", "--verbose", count=True, help="INFO with -v, DEBUG with -vv.")
@click.option("--quiet", is_flag=True, help="Suppress the stderr summary and warnings.")
@click.option("--data-dir", default="src/data", show_default=True,
              help="Directory searched for data files given by name.")
@click.option("--degree-cap", default=6, show_default=True, help="Largest degree accepted.")
@click.option("--side-cap", default=729, show_default=True, help="Largest operator side n^m.")
@click.option("--lie-dim-cap", default=64, show_default=True, help="Largest Lie algebra dimension.")
@click.option("--no-ybe-check", is_flag=True, help="Trust R-matrix files without checking them.")
@click.option("--mu", default="1", callback=_fraction, show_default=True,
              help="Scalar by which the central element acts on the module.")
@click.pass_context
def cli(
    ctx: click.Context,
    verbose: int,
    quiet: bool,
    data_dir: str,
    degree_cap: int,
    side_cap: int,
    lie_dim_cap: int,
    no_ybe_check: bool,
    mu: Fraction,
) -> None:
    """Exact braided algebra and Lie bialgebra computations."""
    settings = Settings(
        max_degree=degree_cap,
        max_side=side_cap,
        max_lie_dim=lie_dim_cap,
        central_scalar=mu,
        check_ybe=not no_ybe_check,
        data_dir=Path(data_dir),
        verbosity=verbose,
        quiet=quiet,
    )
    configure_logging(settings)
    ctx.obj = CommandRunner(settings)


def _emit(result: CommandResult) -> None:
    ctx = click.get_current_context()
    runner = ctx.find_object(CommandRunner)
    click.echo(dumps(result.document()), nl=False)
    if runner is None or not runner.settings.quiet:
        ReportView().render(result)
    ctx.exit(result.exit_code)


@cli.command("ybe-check")
@click.argument("rmatrix_file")
@click.pass_obj
def ybe_check(runner: CommandRunner, rmatrix_file: str) -> None:
    """Check the Yang-Baxter equation for an R-matrix file."""
    _emit(runner.ybe_check(rmatrix_file))


@cli.command()
@click.option("--cartan", "cartan_file", required=True, help="Cartan data file.")
@click.option("--max-degree", default=4, show_default=True)
@click.pass_obj
def serre(runner: CommandRunner, cartan_file: str, max_degree: int) -> None:
    """Relations of U_q(n+) per degree with PBW comparison."""
    _emit(runner.serre(cartan_file, max_degree))


@cli.command()
@click.option("--rmatrix", "rmatrix_file", default=None, help="R-matrix or bilinear-form file.")
@click.option("--cartan", "cartan_file", default=None, help="Cartan data file.")
@click.option("--max-degree", default=4, show_default=True)
@click.pass_obj
def ranks(runner: CommandRunner, rmatrix_file: Optional[str], cartan_file: Optional[str], max_degree: int) -> None:
    """Graded ranks of the pairing only."""
    _emit(runner.ranks(max_degree, rmatrix_file, cartan_file))


@cli.command()
@click.option("--rmatrix", "rmatrix_file", required=True, help="R-matrix or bilinear-form file.")
@click.option("--truncate", default=None, type=int, help="Truncation degree (default 6).")
@click.pass_obj
def exp(runner: CommandRunner, rmatrix_file: str, truncate: Optional[int]) -> None:
    """Truncated braided exponential and its eigenfunction check."""
    _emit(runner.exp(rmatrix_file, truncate))


@cli.command("lie-check")
@click.argument("algebra_file")
@click.pass_obj
def lie_check(runner: CommandRunner, algebra_file: str) -> None:
    """Verify Lie bialgebra and quasitriangularity axioms."""
    _emit(runner.lie_check(algebra_file))


@cli.command("lie-induct")
@click.option("--algebra", "algebra_file", required=True, help="Quasitriangular Lie bialgebra file.")
@click.option("--rep", "rep_file", required=True, help="Representation file.")
@click.option("--steps", default=1, show_default=True, help="Number of nodes to adjoin.")
@click.pass_obj
def lie_induct(runner: CommandRunner, algebra_file: str, rep_file: str, steps: int) -> None:
    """Adjoin a node by double-bosonisation and print certificates."""
    _emit(runner.lie_induct(algebra_file, rep_file, steps))


@cli.command()
@click.argument("algebra_file")
@click.pass_obj
def transmute(runner: CommandRunner, algebra_file: str) -> None:
    """Self-transmutation into a braided Lie bialgebra."""
    _emit(runner.transmute(algebra_file))
