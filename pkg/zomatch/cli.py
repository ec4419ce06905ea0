"""zomatch CLI application using Typer and Rich."""

import math
import sys
import time
from pathlib import Path

import click
import typer
from rich.console import Console

from zomatch import __version__
from zomatch.config import Settings, get_settings
from zomatch.core.enums import Distribution, ExitCode, ExportFormat
from zomatch.core.exceptions import InputError, InvariantViolation, ZomatchError
from zomatch.core.logging import configure_logging

# Initialize CLI app and console
app = typer.Typer(
    name="zomatch",
    help="Zero-one weighted bipartite matching and approximate bottleneck matching",
    add_completion=False,
    no_args_is_help=True,
)
console = Console()

# Sub-applications
gen_app = typer.Typer(help="Generate seeded instances", no_args_is_help=True)
app.add_typer(gen_app, name="gen")


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        console.print(f"[bold cyan]zomatch[/bold cyan] v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False,
        "--version",
        "-V",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
    log_level: str | None = typer.Option(
        None,
        "--log-level",
        "-l",
        help="Log level (defaults to ZOM_LOG_LEVEL)",
    ),
) -> None:
    """zomatch - primal-dual matching over 0/1 edge weights."""
    configure_logging(log_level or get_settings().log_level)


def _fail(error: Exception) -> typer.Exit:
    """Print an error and pick the exit code for it."""
    if isinstance(error, InvariantViolation):
        console.print(f"[red]Invariant violated:[/red] {error}")
        return typer.Exit(ExitCode.INVARIANT)
    if isinstance(error, (InputError, OSError)):
        console.print(f"[red]Error:[/red] {error}")
        return typer.Exit(ExitCode.IO)
    console.print(f"[red]Error:[/red] {error}")
    return typer.Exit(ExitCode.USAGE)


def _check_format(format: str) -> ExportFormat:
    try:
        return ExportFormat(format.lower())
    except ValueError:
        console.print(f"[red]Error:[/red] Unknown export format: {format}")
        raise typer.Exit(ExitCode.USAGE) from None


def _settings(check: bool) -> Settings:
    settings = get_settings()
    if not check:
        return settings
    return settings.model_copy(
        update={"matcher": settings.matcher.model_copy(update={"check_invariants": True})}
    )


def _separator_r(weights: str) -> int | None:
    """r from 'separator' or 'separator:<r>'; 0 means the default n^(2/3)."""
    if weights == "separator":
        return 0
    if not weights.startswith("separator:"):
        return None
    try:
        r = int(weights.split(":", 1)[1])
    except ValueError:
        console.print(f"[red]Error:[/red] Bad separator size in {weights!r}")
        raise typer.Exit(ExitCode.USAGE) from None
    if r < 1:
        console.print("[red]Error:[/red] Separator size must be positive")
        raise typer.Exit(ExitCode.USAGE)
    return r


def _write(text: str, output_file: Path | None) -> None:
    if output_file is None:
        sys.stdout.write(text)
        return
    output_file.write_text(text, encoding="utf-8")
    console.print(f"[green]Wrote {output_file}[/green]")


@app.command("match-graph")
def match_graph(
    path: Path = typer.Argument(..., help="Graph file ('n_a n_b m' header, then 'a b w' lines)"),
    weights: str | None = typer.Option(
        None,
        "--weights",
        "-w",
        help="Weights file, or 'separator:<r>' to weight by recursive separation",
    ),
    trace: bool = typer.Option(False, "--trace", "-t", help="Show the per-phase table"),
    check: bool = typer.Option(
        False, "--check", "-c", help="Check the invariant suite at every stage"
    ),
    output_file: Path | None = typer.Option(
        None, "--output", "-o", help="Write the stats record to this file"
    ),
    format: str = typer.Option("json", "--format", "-f", help="Stats format: json or csv"),
    timings: bool = typer.Option(False, "--timings", help="Record wall time in the stats"),
) -> None:
    """
    Run the 0/1 matcher on a graph file.

    Examples:
        zomatch match-graph graph.txt --trace
        zomatch match-graph lattice.txt --weights separator:16 -o stats.json
        zomatch match-graph graph.txt --weights weights.txt --format csv -o stats.csv
    """
    export_format = _check_format(format)
    settings = _settings(check)

    from zomatch.data.formats import parse_graph_file, parse_weights_file
    from zomatch.matcher.engine import run_matcher
    from zomatch.output.exporters import export_record
    from zomatch.output.formatters import StatsFormatter
    from zomatch.output.models import InstanceDescriptor, StatsRecord
    from zomatch.separator.models import WeightAssignment
    from zomatch.separator.recursive import (
        assign_weights_recursive,
        default_piece_size,
        measure_weight,
    )

    assignment: WeightAssignment | None = None
    start = time.perf_counter()
    try:
        graph = parse_graph_file(path)
        r = _separator_r(weights) if weights else None
        if r is not None:
            r = r or default_piece_size(graph.vertex_count)
            assignment = assign_weights_recursive(graph, r, settings=settings)
            assignment, result = measure_weight(graph, assignment, settings=settings)
        else:
            if weights:
                graph = graph.reweighted(parse_weights_file(weights, graph.m))
            result = run_matcher(graph, settings=settings)
    except (ZomatchError, OSError) as e:
        raise _fail(e) from e
    elapsed = time.perf_counter() - start

    instance = InstanceDescriptor(
        kind="graph",
        source=str(path),
        n_a=graph.n_a,
        n_b=graph.n_b,
        m=graph.m,
        weights="file" if weights and assignment is None else weights,
    )
    record = StatsRecord.from_match(
        result,
        instance,
        seed=None,
        wall_time=elapsed if timings else None,
        assignment=assignment,
    )
    StatsFormatter(console).display_match(record, trace=trace)

    if output_file:
        try:
            export_record(record, output_file, format=export_format)
        except OSError as e:
            raise _fail(e) from e
        console.print(f"\n[green]Stats exported to {output_file}[/green]")


@app.command("match-bottleneck")
def match_bottleneck(
    path: Path = typer.Argument(..., help="Point file ('A x y' / 'B x y' lines)"),
    epsilon: float | None = typer.Option(
        None, "--epsilon", "-e", help="Approximation parameter in (0, 1]"
    ),
    r: int | None = typer.Option(
        None, "--r", "-r", help="Coarse box parameter, a perfect square (default ~n^(2/3))"
    ),
    oracle: bool | None = typer.Option(
        None, "--oracle/--no-oracle", help="Compare with the exact bottleneck"
    ),
    rungs: bool = typer.Option(False, "--rungs", help="Show every distance guess"),
    check: bool = typer.Option(
        False, "--check", "-c", help="Check the invariant suite at every stage"
    ),
    output_file: Path | None = typer.Option(
        None, "--output", "-o", help="Write the stats record to this file"
    ),
    format: str = typer.Option("json", "--format", "-f", help="Stats format: json or csv"),
    timings: bool = typer.Option(False, "--timings", help="Record wall time in the stats"),
) -> None:
    """
    Approximate bottleneck matching of a planar point file.

    Examples:
        zomatch match-bottleneck points.txt --epsilon 0.25
        zomatch match-bottleneck points.txt -e 0.5 --r 16 --rungs -o stats.json
    """
    export_format = _check_format(format)
    if epsilon is not None and not 0 < epsilon <= 1:
        console.print("[red]Error:[/red] --epsilon must lie in (0, 1]")
        raise typer.Exit(ExitCode.USAGE)
    if r is not None and (r < 1 or math.isqrt(r) ** 2 != r):
        console.print("[red]Error:[/red] --r must be a positive perfect square")
        raise typer.Exit(ExitCode.USAGE)
    settings = _settings(check)

    from rich.progress import Progress, SpinnerColumn, TextColumn

    from zomatch.data.formats import parse_points_file
    from zomatch.geo.matcher import bottleneck_match
    from zomatch.output.exporters import export_record
    from zomatch.output.formatters import StatsFormatter
    from zomatch.output.models import InstanceDescriptor, StatsRecord

    start = time.perf_counter()
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    ) as progress:
        progress.add_task("Matching...", total=None)
        try:
            points = parse_points_file(path)
            result = bottleneck_match(points, epsilon, r, settings=settings, oracle=oracle)
        except (ZomatchError, OSError) as e:
            raise _fail(e) from e
    elapsed = time.perf_counter() - start

    instance = InstanceDescriptor(
        kind="points", source=str(path), n_a=points.n_a, n_b=points.n_b
    )
    record = StatsRecord.from_bottleneck(
        result, instance, seed=None, wall_time=elapsed if timings else None
    )
    StatsFormatter(console).display_bottleneck(record, show_rungs=rungs)

    if output_file:
        try:
            export_record(record, output_file, format=export_format)
        except OSError as e:
            raise _fail(e) from e
        console.print(f"\n[green]Stats exported to {output_file}[/green]")


@gen_app.command("graph")
def gen_graph(
    n_a: int = typer.Option(..., "--n-a", help="Number of A-vertices"),
    n_b: int = typer.Option(..., "--n-b", help="Number of B-vertices"),
    m: int = typer.Option(..., "--m", "-m", help="Number of distinct edges"),
    p: float = typer.Option(0.5, "--p", "-p", help="Probability of weight 1"),
    seed: int | None = typer.Option(None, "--seed", "-s", help="Seed (defaults to ZOM_SEED)"),
    output_file: Path | None = typer.Option(
        None, "--output", "-o", help="Output path (stdout if omitted)"
    ),
) -> None:
    """
    Generate a random 0/1-weighted bipartite graph.

    Examples:
        zomatch gen graph --n-a 50 --n-b 50 --m 300 --p 0.9 -o graph.txt
    """
    from zomatch.data.formats import emit_graph
    from zomatch.data.generators import random_graph

    try:
        graph = random_graph(n_a, n_b, m, p, get_settings().seed if seed is None else seed)
        _write(emit_graph(graph), output_file)
    except (ZomatchError, OSError) as e:
        raise _fail(e) from e


@gen_app.command("lattice")
def gen_lattice(
    width: int = typer.Option(..., "--width", help="Lattice columns"),
    height: int = typer.Option(..., "--height", help="Lattice rows"),
    output_file: Path | None = typer.Option(
        None, "--output", "-o", help="Output path (stdout if omitted)"
    ),
) -> None:
    """
    Generate a lattice graph with coordinates, for separator weighting.

    Examples:
        zomatch gen lattice --width 32 --height 32 -o lattice.txt
    """
    from zomatch.data.formats import emit_graph
    from zomatch.data.generators import lattice_instance

    try:
        _write(emit_graph(lattice_instance(width, height)), output_file)
    except (ZomatchError, OSError) as e:
        raise _fail(e) from e


@gen_app.command("points")
def gen_points(
    n: int = typer.Option(..., "--n", "-n", help="Points per side"),
    distribution: Distribution = typer.Option(
        Distribution.UNIFORM, "--distribution", "-d", help="Point distribution"
    ),
    seed: int | None = typer.Option(None, "--seed", "-s", help="Seed (defaults to ZOM_SEED)"),
    output_file: Path | None = typer.Option(
        None, "--output", "-o", help="Output path (stdout if omitted)"
    ),
) -> None:
    """
    Generate two planar point sets in the unit square.

    Examples:
        zomatch gen points --n 64 --distribution clustered -o points.txt
    """
    from zomatch.data.formats import emit_points
    from zomatch.data.generators import random_points

    try:
        points = random_points(n, distribution, get_settings().seed if seed is None else seed)
        _write(emit_points(points), output_file)
    except (ZomatchError, OSError) as e:
        raise _fail(e) from e


@app.command()
def verify(
    count: int = typer.Option(50, "--count", "-n", help="Number of random graphs"),
    points: int = typer.Option(0, "--points", "-p", help="Number of random point sets"),
    seed: int | None = typer.Option(None, "--seed", "-s", help="Seed (defaults to ZOM_SEED)"),
    output_file: Path | None = typer.Option(
        None, "--output", "-o", help="Write the JSON report to this file"
    ),
) -> None:
    """
    Cross-check the matchers against exact oracles and the invariant suite.

    Exits non-zero when any case disagrees with its oracle or breaks an invariant.
    Graph cases are checked at every stage. Point cases check the ledger on every
    distance guess and the per-stage geometric invariants on the winning guess for
    its first ZOM_GEO_VERIFY_PHASES phases (default 3).

    Examples:
        zomatch verify
        zomatch verify --count 500 --points 30 --seed 7
    """
    from rich.progress import Progress, SpinnerColumn, TextColumn

    from zomatch.analysis.verifier import Verifier
    from zomatch.output.formatters import StatsFormatter

    settings = get_settings()
    seed = settings.seed if seed is None else seed

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    ) as progress:
        task = progress.add_task("Verifying...", total=None)
        verifier = Verifier(
            settings=settings,
            progress_callback=lambda msg: progress.update(task, description=msg),
        )
        try:
            report = verifier.run(count, seed, points=points)
        except ZomatchError as e:
            raise _fail(e) from e

    StatsFormatter(console).display_verify(report)
    if output_file:
        try:
            output_file.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
        except OSError as e:
            raise _fail(e) from e
        console.print(f"\n[green]Report exported to {output_file}[/green]")

    if not report.ok:
        raise typer.Exit(ExitCode.INVARIANT)


@app.command()
def bench(
    sizes: str | None = typer.Option(
        None, "--sizes", help="Comma-separated n values (e.g. '64,128,256')"
    ),
    trials: int | None = typer.Option(None, "--trials", "-t", help="Trials per size"),
    p: float | None = typer.Option(None, "--p", "-p", help="Probability of weight 1"),
    seed: int | None = typer.Option(None, "--seed", "-s", help="Seed (defaults to ZOM_SEED)"),
    output_file: Path | None = typer.Option(
        None, "--output", "-o", help="Write the JSON report to this file"
    ),
) -> None:
    """
    Sweep n and compare phase counts with sqrt(w).

    Examples:
        zomatch bench
        zomatch bench --sizes 64,128,256,512 --trials 9 --p 1.0
    """
    from zomatch.analysis.bench import PhaseBench
    from zomatch.output.formatters import StatsFormatter

    try:
        size_list = [int(s) for s in sizes.split(",") if s.strip()] if sizes else None
    except ValueError:
        console.print(f"[red]Error:[/red] Bad size list: {sizes}")
        raise typer.Exit(ExitCode.USAGE) from None

    settings = get_settings()
    seed = settings.seed if seed is None else seed
    try:
        report = PhaseBench(settings).run(seed, size_list, trials, p)
    except ZomatchError as e:
        raise _fail(e) from e

    StatsFormatter(console).display_bench(report)
    if output_file:
        try:
            output_file.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
        except OSError as e:
            raise _fail(e) from e
        console.print(f"\n[green]Report exported to {output_file}[/green]")

    if not report.ok:
        raise typer.Exit(ExitCode.INVARIANT)


def run() -> None:
    """Console entry point: usage errors exit 1 instead of click's 2."""
    try:
        code = app(standalone_mode=False)
    except click.exceptions.Abort:
        console.print("[yellow]Aborted.[/yellow]")
        sys.exit(ExitCode.USAGE)
    except click.ClickException as e:
        e.show()
        sys.exit(ExitCode.USAGE)
    sys.exit(code if isinstance(code, int) else ExitCode.OK)


if __name__ == "__main__":
    run()
