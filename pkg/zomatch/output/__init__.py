"""Stats records, exporters and console formatting."""

from zomatch.output.exporters import CSVExporter, JSONExporter, export_record
from zomatch.output.formatters import StatsFormatter
from zomatch.output.models import SCHEMA_VERSION, InstanceDescriptor, StatsRecord

__all__ = [
    "CSVExporter",
    "JSONExporter",
    "export_record",
    "StatsFormatter",
    "SCHEMA_VERSION",
    "InstanceDescriptor",
    "StatsRecord",
]
