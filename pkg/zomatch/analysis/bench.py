"""Phase-count sweep: how the number of phases grows against sqrt(w)."""

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from zomatch.analysis.models import BenchReport, BenchRow
from zomatch.config import Settings, get_settings
from zomatch.data.generators import random_graph
from zomatch.matcher.engine import run_matcher

logger = logging.getLogger(__name__)


def trial_seed(seed: int, n: int, trial: int) -> int:
    return int(np.random.SeedSequence([seed, n, trial]).generate_state(1)[0])


class PhaseBench:
    """
    Runs seeded random graphs at several sizes and records phases and weights.

    Trials are independent matcher runs, so they fan out over a thread pool;
    results are collected in submission order, which keeps reports
    reproducible.
    """

    def __init__(
        self,
        settings: Settings | None = None,
        progress_callback: Callable[[str], None] | None = None,
    ) -> None:
        base = settings or get_settings()
        self._settings = base.model_copy(update={"strict_invariants": False})
        self._progress = progress_callback or (lambda message: None)

    def run(
        self,
        seed: int,
        sizes: Sequence[int] | None = None,
        trials: int | None = None,
        weight_one_probability: float | None = None,
    ) -> BenchReport:
        bench = self._settings.bench
        sizes = list(sizes or bench.sizes)
        trials = trials or bench.trials
        p = weight_one_probability
        if p is None:
            p = bench.weight_one_probability

        report = BenchReport(seed=seed, weight_one_probability=p)
        with ThreadPoolExecutor(max_workers=bench.workers) as executor:
            for n in sizes:
                self._progress(f"n={n}: {trials} trials")
                m = min(bench.edge_factor * n, n * n)
                jobs = [(n, m, p, trial_seed(seed, n, t)) for t in range(trials)]
                outcomes = list(executor.map(self._trial, jobs))
                report.rows.append(
                    BenchRow(
                        n=n,
                        m=m,
                        trials=trials,
                        phases=[lam for lam, _ in outcomes],
                        weights=[w for _, w in outcomes],
                    )
                )
                logger.debug("n=%d median phases %.1f", n, report.rows[-1].median_phases)

        logger.info("Bench over %s: trend %s", sizes, "ok" if report.trend_ok else "violated")
        return report

    def _trial(self, job: tuple[int, int, float, int]) -> tuple[int, int]:
        n, m, p, seed = job
        result = run_matcher(random_graph(n, n, m, p, seed), settings=self._settings)
        return result.total_phases, result.weight
