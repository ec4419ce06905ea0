"""Hopcroft-Karp baseline and exact oracles."""

from zomatch.baseline.hopcroft_karp import UNMATCHED, hopcroft_karp, maximum_matching
from zomatch.baseline.models import BottleneckOracleResult, OracleResult
from zomatch.baseline.oracles import (
    brute_force_max_matching,
    match_within,
    oracle_bottleneck,
    squared_distances,
)

__all__ = [
    "UNMATCHED",
    "hopcroft_karp",
    "maximum_matching",
    "BottleneckOracleResult",
    "OracleResult",
    "brute_force_max_matching",
    "match_within",
    "oracle_bottleneck",
    "squared_distances",
]
