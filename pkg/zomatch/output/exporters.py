"""Export utilities for stats records."""

import csv
import json
from pathlib import Path
from typing import Any

from zomatch.core.enums import ExportFormat
from zomatch.output.models import StatsRecord


class JSONExporter:
    """Export stats records to JSON format."""

    def export(self, record: StatsRecord, file_path: str | Path) -> None:
        """Export a stats record to a JSON file."""
        with open(file_path, "w", encoding="utf-8") as f:
            f.write(self.to_string(record))

    def to_string(self, record: StatsRecord) -> str:
        """Convert a stats record to a JSON string."""
        return json.dumps(record.model_dump(mode="json"), indent=2) + "\n"

    def load(self, file_path: str | Path) -> StatsRecord:
        """Read a record written by export."""
        with open(file_path, encoding="utf-8") as f:
            return StatsRecord.model_validate(json.load(f))


class CSVExporter:
    """Export stats records to CSV format."""

    def export(self, record: StatsRecord, file_path: str | Path) -> None:
        """Export one row per phase, or per rung for bottleneck runs."""
        rows: list[dict[str, Any]] = []

        for rung in record.rungs:
            rows.append({
                "delta": rung.delta,
                "outcome": rung.outcome.value,
                "matching_size": rung.matching_size,
                "bottleneck": "" if rung.bottleneck is None else rung.bottleneck,
                "phases": rung.total_phases,
                "realized_weight": rung.realized_weight,
                "boundary_points": rung.boundary_points,
                "compact_vertices": rung.compact_vertices,
                "compact_edges": rung.compact_edges,
            })

        # bottleneck records keep their phases inside the rungs
        phases = record.phases if not record.rungs else []
        for phase in phases:
            rows.append({
                "phase": phase.phase_index,
                "ell": phase.ell,
                "y_max": phase.y_max,
                "augmenting_paths": phase.augmenting_paths,
                "affected_pieces": phase.affected_pieces,
                "sum_path_weights": phase.sum_path_weights,
                "deleted_edges": phase.deleted_edges,
            })

        if not rows:
            return

        fieldnames = list(rows[0].keys())

        with open(file_path, "w", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=fieldnames)
            writer.writeheader()
            writer.writerows(rows)

    def export_summary(self, records: list[StatsRecord], file_path: str | Path) -> None:
        """Export one row per record."""
        rows = [self._summary_row(record) for record in records]

        if not rows:
            return

        fieldnames = list(rows[0].keys())

        with open(file_path, "w", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=fieldnames)
            writer.writeheader()
            writer.writerows(rows)

    @staticmethod
    def _summary_row(record: StatsRecord) -> dict[str, Any]:
        def blank(value: object) -> object:
            return "" if value is None else value

        return {
            "schema_version": record.schema_version,
            "algorithm": record.algorithm,
            "source": blank(record.instance.source),
            "n_a": record.instance.n_a,
            "n_b": record.instance.n_b,
            "m": blank(record.instance.m),
            "seed": blank(record.seed),
            "matching_size": record.matching_size,
            "weight": blank(record.weight),
            "total_phases": record.total_phases,
            "phase_bound": blank(record.phase_bound),
            "total_affected": record.total_affected,
            "sum_path_weights": record.sum_path_weights,
            "wall_time_seconds": blank(record.wall_time_seconds),
            "bottleneck": blank(record.bottleneck),
            "oracle_bottleneck": blank(record.oracle_bottleneck),
            "ratio": blank(record.ratio),
            "ledger_violations": "; ".join(record.ledger_violations),
        }


def export_record(
    record: StatsRecord,
    file_path: str | Path,
    format: str = "json",
) -> None:
    """
    Export a stats record to file.

    Args:
        record: Stats record to export
        file_path: Output file path
        format: Export format ('json', 'csv'); csv writes one row per phase or
            per distance guess, or the one-row summary when there are neither
    """
    format = format.lower()

    if format == ExportFormat.JSON:
        JSONExporter().export(record, file_path)
    elif format == ExportFormat.CSV:
        if record.phases or record.rungs:
            CSVExporter().export(record, file_path)
        else:
            CSVExporter().export_summary([record], file_path)
    else:
        raise ValueError(f"Unknown export format: {format}")
