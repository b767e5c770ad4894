"""
hubwalk — Centrality Analyzer
==============================
Runs a chosen set of hub/authority methods on one graph and, when asked,
compares their rankings:

  1. Quantum walks      — CQAu, CQAw, CQG (closed-form limiting occupation)
  2. Classical methods  — HITS, PageRank / reverse PageRank, BEK
  3. Comparison         — Kendall τ-b and top-k overlap, hub and authority

Methods run concurrently on a thread pool; results come back in the
requested order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from hubwalk.config import Config
from hubwalk.models.graph import DirectedGraph
from hubwalk.models.results import ALL_METHODS, CentralityResult
from hubwalk.services.classical_rank import IterationConfig, bek_scores, hits_scores, pagerank_result
from hubwalk.services.quantum_walk import WalkConfig, cqau_scores, cqaw_scores, cqg_scores
from hubwalk.services.rank_analysis import SIDES, ComparisonReport, comparison_report
from hubwalk.utils.logger import setup_logger

logger = setup_logger("CentralityAnalyzer")


def parse_methods(text: str) -> Tuple[str, ...]:
    """"cqau, HITS" -> ("cqau", "hits"). Raises ValueError on unknown or empty input."""
    names = tuple(part.strip().lower() for part in text.split(",") if part.strip())
    if not names:
        raise ValueError("at least one method must be selected")
    unknown = [name for name in names if name not in ALL_METHODS]
    if unknown:
        raise ValueError(f"unknown method(s) {', '.join(unknown)}; choose from {', '.join(ALL_METHODS)}")
    return names


@dataclass(frozen=True)
class AnalysisRun:
    graph: DirectedGraph
    results: Tuple[CentralityResult, ...]
    comparisons: Dict[str, ComparisonReport] = field(default_factory=dict)

    def result(self, method: str) -> CentralityResult:
        for r in self.results:
            if r.method == method:
                return r
        raise KeyError(method)


class CentralityAnalyzer:
    """
    Stateless orchestrator. `alpha` applies to CQA, CQG and PageRank alike;
    leave it None to use Config.DEFAULT_ALPHA.
    """

    def __init__(self, alpha: Optional[float] = None, max_workers: Optional[int] = None):
        alpha = Config.DEFAULT_ALPHA if alpha is None else alpha
        self.walk_cfg = WalkConfig(alpha=alpha)
        self.iter_cfg = IterationConfig(alpha=alpha)
        self.max_workers = max_workers or Config.MAX_WORKERS
        self._runners: Dict[str, Callable[[DirectedGraph], CentralityResult]] = {
            "cqau": lambda g: cqau_scores(g, self.walk_cfg),
            "cqaw": lambda g: cqaw_scores(g, self.walk_cfg),
            "cqg": lambda g: cqg_scores(g, self.walk_cfg),
            "hits": lambda g: hits_scores(g, self.iter_cfg),
            "pagerank": lambda g: pagerank_result(g, self.iter_cfg),
            "bek": bek_scores,
        }
        logger.debug("CentralityAnalyzer initialised (alpha=%g, workers=%d)", alpha, self.max_workers)

    @property
    def alpha(self) -> float:
        return self.walk_cfg.alpha

    # ── public entry points ────────────────────────────────────────
    def run(self, g: DirectedGraph, methods: Iterable[str] = ALL_METHODS) -> List[CentralityResult]:
        methods = list(methods)
        unknown = [m for m in methods if m not in self._runners]
        if unknown:
            raise ValueError(f"unknown method(s): {', '.join(unknown)}")
        logger.info("Running %s on n=%d, edges=%d", ",".join(methods), g.n, g.edge_count)

        workers = max(1, min(self.max_workers, len(methods)))
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="centrality") as pool:
            futures = [pool.submit(self._runners[m], g) for m in methods]
            results = [f.result() for f in futures]

        for r in results:
            for warning in r.warnings:
                logger.warning("%s: %s", r.title, warning)
        return results

    def compare(
        self,
        results: Sequence[CentralityResult],
        k: Optional[int] = None,
        tie_tol: Optional[float] = None,
    ) -> Dict[str, ComparisonReport]:
        k = Config.TOP_K if k is None else k
        tie_tol = Config.TIE_TOL if tie_tol is None else tie_tol
        if results and k > results[0].n:
            logger.info("k=%d exceeds n=%d, comparing full rankings", k, results[0].n)
            k = results[0].n
        return {side: comparison_report(results, side, k, tie_tol) for side in SIDES}

    def analyze(
        self,
        g: DirectedGraph,
        methods: Iterable[str] = ALL_METHODS,
        k: Optional[int] = None,
        tie_tol: Optional[float] = None,
        with_comparisons: bool = False,
    ) -> AnalysisRun:
        """Full pipeline: run every method, then compare when requested."""
        results = tuple(self.run(g, methods))
        comparisons = self.compare(results, k, tie_tol) if with_comparisons else {}
        logger.info("Analysis complete: %d method(s), %d comparison side(s)", len(results), len(comparisons))
        return AnalysisRun(graph=g, results=results, comparisons=comparisons)
