"""Primal-dual 0/1-weighted matcher with its invariant checks."""

from zomatch.matcher.dial import BucketQueue
from zomatch.matcher.engine import (
    AugmentingPath,
    DijkstraOutcome,
    ZeroOneMatcher,
    augment,
    infinite_distance,
    preprocess,
    run_matcher,
    shortest_slack_distances,
    stage1_dijkstra,
    stage2_dfs,
)
from zomatch.matcher.invariants import (
    admissible_cycle_violations,
    free_dual_violations,
    has_admissible_augmenting_path,
    matched_distance_violations,
    phase_ledger,
    state_violations,
)
from zomatch.matcher.models import LedgerEntry, LedgerReport, MatchResult, PhaseStats
from zomatch.matcher.search import AdmissibleNetwork, AugmentingPathSearch, SearchOutcome

__all__ = [
    "BucketQueue",
    "AugmentingPath",
    "DijkstraOutcome",
    "ZeroOneMatcher",
    "augment",
    "infinite_distance",
    "preprocess",
    "run_matcher",
    "shortest_slack_distances",
    "stage1_dijkstra",
    "stage2_dfs",
    "admissible_cycle_violations",
    "free_dual_violations",
    "has_admissible_augmenting_path",
    "matched_distance_violations",
    "phase_ledger",
    "state_violations",
    "LedgerEntry",
    "LedgerReport",
    "MatchResult",
    "PhaseStats",
    "AdmissibleNetwork",
    "AugmentingPathSearch",
    "SearchOutcome",
]
