"""Command line interface: ``krcrystal build|decompose|fermionic|verify|export``."""

__all__ = ["cli"]

import functools
import json
import logging
import sys
from typing import Any, Callable, List, Optional

import click

from .cartan import AffineType, parse_type
from .errno import USAGE_ERROR, VERIFY_FAILED, VERIFY_PASSED
from .exceptions import CrystalInternalError, CrystalUsageError, GraphFormatError
from .executor import AsyncSweepExecutor, DefaultSweepExecutor
from .fermionic import fermionic_table
from .formatter import (
    dumps,
    format_dot,
    format_fermionic_csv,
    format_fermionic_rows,
    format_graph,
    format_labels,
    format_norm_checks,
    parse_graph,
)
from .kn_tableaux import DEFAULT_MAX_VERTICES
from .kr_crystal import build as build_crystal
from .kr_crystal import decompose as decompose_crystal
from .verify import SUITES, run_suites

logger = logging.getLogger(__name__)

_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


def _handle_errors(command: Callable[..., Any]) -> Callable[..., Any]:
    """Map library errors onto the documented exit codes."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except CrystalUsageError as err:
            click.echo(f"error: {err.message}", err=True)
            sys.exit(USAGE_ERROR)
        except CrystalInternalError as err:
            logger.error("internal error: %s", err.message)
            click.echo(f"internal error: {err.message}", err=True)
            sys.exit(VERIFY_FAILED)

    return wrapper


def _type_option(command: Callable[..., Any]) -> Callable[..., Any]:
    command = click.option("--s", "s", type=int, required=True, help="Level s.")(command)
    command = click.option("--r", "r", type=int, required=True, help="Node r.")(command)
    command = click.option(
        "--type", "type_label", required=True, help="Affine type such as D4~1 or A5~2."
    )(command)
    return command


def _parse_colors(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise click.BadParameter(f"colors must be a comma separated list, got {text!r}")


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(text)


@click.group()
@click.option(
    "--max-vertices",
    type=int,
    default=DEFAULT_MAX_VERTICES,
    show_default=True,
    help="Resource cap on the vertices of any generated graph.",
)
@click.option(
    "--log-level",
    type=click.Choice(_LOG_LEVELS, case_sensitive=False),
    default="WARNING",
    show_default=True,
)
@click.pass_context
def cli(ctx: click.Context, max_vertices: int, log_level: str) -> None:
    """Kirillov-Reshetikhin crystals and their verification."""
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    ctx.obj = {"max_vertices": max_vertices}


@cli.command()
@_type_option
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output JSON file.")
@click.pass_context
@_handle_errors
def build(ctx: click.Context, type_label: str, r: int, s: int, out: Optional[str]) -> None:
    """Generate B^{r,s} and write it as JSON."""
    t = parse_type(type_label)
    g = build_crystal(t, r, s, max_vertices=ctx.obj["max_vertices"])
    logger.info("built %r", g)
    _write(dumps(format_graph(g)) + "\n", out)


@cli.command()
@_type_option
@click.option("--colors", required=True, help="Comma separated colors, e.g. 1,2,3,4.")
@click.pass_context
@_handle_errors
def decompose(ctx: click.Context, type_label: str, r: int, s: int, colors: str) -> None:
    """Print the highest weights of the color-restricted components."""
    t = parse_type(type_label)
    chosen = _parse_colors(colors)
    g = build_crystal(t, r, s, max_vertices=ctx.obj["max_vertices"])
    for labels in decompose_crystal(g, chosen):
        click.echo(format_labels(labels))


@cli.command()
@_type_option
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--all-rows", is_flag=True, help="Also list weights with N = M = 0.")
@_handle_errors
def fermionic(type_label: str, r: int, s: int, fmt: str, all_rows: bool) -> None:
    """Print the (lambda, N, M) table."""
    t = parse_type(type_label)
    rows = fermionic_table(t, r, s, nonzero_only=not all_rows)
    if fmt == "csv":
        click.echo(format_fermionic_csv(t, rows), nl=False)
    else:
        click.echo(dumps(format_fermionic_rows(t, rows)))


@cli.command()
@_type_option
@click.option(
    "--suite",
    type=click.Choice(list(SUITES) + ["all"]),
    default="all",
    show_default=True,
)
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker threads for sweeps.")
@click.option(
    "--report",
    type=click.Path(dir_okay=False),
    default=None,
    help="Write the norm checks as JSON to this file.",
)
@click.pass_context
@_handle_errors
def verify(
    ctx: click.Context,
    type_label: str,
    r: int,
    s: int,
    suite: str,
    jobs: int,
    report: Optional[str],
) -> None:
    """Run verification suites; exit 1 on any failure."""
    t: AffineType = parse_type(type_label)
    executor = AsyncSweepExecutor(jobs) if jobs > 1 else DefaultSweepExecutor()
    suites = SUITES if suite == "all" else (suite,)
    results, checks = run_suites(
        t, r, s, suites, max_vertices=ctx.obj["max_vertices"], executor=executor
    )
    for result in results:
        status = "skipped" if result.skipped else ("pass" if result.passed else "FAIL")
        click.echo(f"{result.name}: {status}")
        if not result.passed:
            for entry in result.failures:
                click.echo(f"  {entry}")
    if report is not None:
        _write(dumps(format_norm_checks(checks)) + "\n", report)
    failed = any(not result.passed for result in results)
    sys.exit(VERIFY_FAILED if failed else VERIFY_PASSED)


@cli.command()
@click.option("--in", "source", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--format", "fmt", type=click.Choice(["dot"]), default="dot", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_handle_errors
def export(source: str, fmt: str, out: Optional[str]) -> None:
    """Convert a persisted JSON graph to DOT."""
    with open(source, encoding="utf-8") as handle:
        try:
            body = json.load(handle)
        except ValueError as err:
            raise GraphFormatError(f"{source} is not JSON: {err}")
    # validates the body before rendering
    parse_graph(body)
    _write(format_dot(body), out)


if __name__ == "__main__":  # pragma: no cover
    cli()
