"""Verification suite and phase-count benchmark."""

from zomatch.analysis.bench import PhaseBench, trial_seed
from zomatch.analysis.models import BenchReport, BenchRow, VerifyCase, VerifyReport
from zomatch.analysis.verifier import Verifier, case_seed, compact_distance_mismatches

__all__ = [
    "PhaseBench",
    "trial_seed",
    "BenchReport",
    "BenchRow",
    "VerifyCase",
    "VerifyReport",
    "Verifier",
    "case_seed",
    "compact_distance_mismatches",
]
