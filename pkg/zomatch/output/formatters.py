"""Rich console formatters for matcher runs, verify reports and benchmarks."""

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from zomatch.analysis.models import BenchReport, VerifyReport
from zomatch.matcher.models import PhaseStats
from zomatch.output.models import StatsRecord


class StatsFormatter:
    """Formats stats records for display."""

    def __init__(self, console: Console | None = None) -> None:
        self.console = console or Console()

    def display_match(self, record: StatsRecord, trace: bool = False) -> None:
        """
        Display a 0/1 matcher run.

        Args:
            record: Stats record of the run
            trace: Also show the per-phase table
        """
        bound = record.phase_bound
        bound_color = "green" if bound is None or record.total_phases <= bound else "red"
        lines = [
            f"[bold]{record.instance.source or 'generated graph'}[/bold]",
            f"|A|={record.instance.n_a} |B|={record.instance.n_b} m={record.instance.m}",
            "",
            f"Matching size: [bold]{record.matching_size}[/bold]",
            f"Weight w: {record.weight}",
            f"Phases: [{bound_color}]{record.total_phases}[/{bound_color}] (bound {bound})",
            f"Affected pieces: {record.total_affected} | Path weights: {record.sum_path_weights}",
        ]
        if record.separator_r is not None:
            c = record.separator_constant
            lines.append(f"Separator r={record.separator_r} c={'-' if c is None else f'{c:.3f}'}")
        if record.wall_time_seconds is not None:
            lines.append(f"Time: {record.wall_time_seconds:.3f}s")
        self.console.print(Panel("\n".join(lines), title="Zero-one matching", border_style="blue"))

        self._display_violations(record.ledger_violations)
        if trace and record.phases:
            self.display_phases(record.phases)

    def display_phases(self, phases: list[PhaseStats], title: str = "Phases") -> None:
        table = Table(title=title, box=box.ROUNDED)
        table.add_column("Phase", style="dim", justify="right")
        table.add_column("ell", justify="right")
        table.add_column("y_max", justify="right")
        table.add_column("Paths", justify="right")
        table.add_column("Affected", justify="right")
        table.add_column("Sum c(P)", justify="right")
        table.add_column("Deleted", justify="right")

        for phase in phases:
            table.add_row(
                str(phase.phase_index),
                str(phase.ell),
                str(phase.y_max),
                str(phase.augmenting_paths),
                str(phase.affected_pieces),
                str(phase.sum_path_weights),
                str(phase.deleted_edges),
            )
        self.console.print(table)

    def display_bottleneck(self, record: StatsRecord, show_rungs: bool = False) -> None:
        """Display an approximate bottleneck matching and, optionally, every guess."""
        ratio = record.ratio
        if ratio is None:
            ratio_str = "-"
        else:
            ok = ratio <= 1 + (record.epsilon or 0.0) + 1e-9
            color = "green" if ok else "red"
            ratio_str = f"[{color}]{ratio:.4f}[/{color}]"

        oracle = record.oracle_bottleneck
        self.console.print(
            Panel(
                f"[bold]{record.instance.source or 'generated points'}[/bold]\n"
                f"n={record.instance.n_a} epsilon={record.epsilon} r={record.r}\n\n"
                f"Bottleneck: [bold]{record.bottleneck:.6g}[/bold] (delta {record.delta:.6g})\n"
                f"Exact: {'-' if oracle is None else f'{oracle:.6g}'} | Ratio: {ratio_str}\n"
                f"Guesses: {len(record.rungs)} | Phases: {record.total_phases}",
                title="Bottleneck matching",
                border_style="blue",
            )
        )
        self._display_violations(record.ledger_violations)
        if show_rungs and record.rungs:
            self._display_rungs(record)

    def _display_rungs(self, record: StatsRecord) -> None:
        table = Table(title="Distance guesses", box=box.ROUNDED)
        table.add_column("delta", justify="right")
        table.add_column("Outcome", justify="center")
        table.add_column("Size", justify="right")
        table.add_column("Bottleneck", justify="right")
        table.add_column("Phases", justify="right")
        table.add_column("w", justify="right")
        table.add_column("Boundary", justify="right")
        table.add_column("Clusters", justify="right")

        for rung in record.rungs:
            color = "green" if rung.perfect else "yellow"
            table.add_row(
                f"{rung.delta:.6g}",
                f"[{color}]{rung.outcome}[/{color}]",
                str(rung.matching_size),
                "-" if rung.bottleneck is None else f"{rung.bottleneck:.6g}",
                str(rung.total_phases),
                str(rung.realized_weight),
                str(rung.boundary_points),
                str(rung.compact_vertices),
            )
        self.console.print(table)

    def display_verify(self, report: VerifyReport, max_failures: int = 10) -> None:
        color = "green" if report.ok else "red"
        self.console.print(
            Panel(
                f"[{color}]{report.summary()}[/{color}]\n"
                f"Invariant violations: {report.violation_count}\n"
                f"Seed: {report.seed}",
                title="Verify",
                border_style=color,
            )
        )
        failures = report.failures
        if not failures:
            return

        table = Table(title="Failing cases", box=box.ROUNDED)
        table.add_column("#", style="dim", justify="right")
        table.add_column("Kind")
        table.add_column("Seed", justify="right")
        table.add_column("Size", justify="right")
        table.add_column("Expected", justify="right")
        table.add_column("Observed", justify="right")
        table.add_column("First violation", max_width=60)

        for case in failures[:max_failures]:
            table.add_row(
                str(case.index),
                case.kind,
                str(case.seed),
                f"{case.n_a}x{case.n_b}",
                f"{case.expected:g}",
                f"{case.observed:g}",
                case.violations[0] if case.violations else "-",
            )
        self.console.print(table)
        if len(failures) > max_failures:
            self.console.print(f"[dim]... and {len(failures) - max_failures} more[/dim]")

    def display_bench(self, report: BenchReport) -> None:
        table = Table(
            title=f"Phases against sqrt(w) (p={report.weight_one_probability})",
            box=box.ROUNDED,
        )
        table.add_column("n", justify="right")
        table.add_column("m", justify="right")
        table.add_column("Trials", justify="right")
        table.add_column("Median phases", justify="right")
        table.add_column("Median w", justify="right")
        table.add_column("Phases/sqrt(w)", justify="right")
        table.add_column("<= 3 sqrt(w)", justify="center")

        for row in report.rows:
            mark = "[green]yes[/green]" if row.within_bound else "[red]no[/red]"
            table.add_row(
                str(row.n),
                str(row.m),
                str(row.trials),
                f"{row.median_phases:.1f}",
                f"{row.median_weight:.1f}",
                f"{row.phases_per_sqrt_weight:.3f}",
                mark,
            )
        self.console.print(table)

        color = "green" if report.trend_ok else "red"
        verdict = "within" if report.trend_ok else "outside"
        self.console.print(
            f"[{color}]Growth {verdict} {report.tolerance:g}x of the smallest size[/{color}]"
        )

    def _display_violations(self, violations: list[str]) -> None:
        for violation in violations:
            self.console.print(f"[yellow]Ledger:[/yellow] {violation}")
