"""
hubwalk — Rank Analysis
========================
Turns score vectors into tie-grouped rankings and compares methods:

  1. rank_with_ties         descending order, chain-merged ex-aequo groups
  2. kendall_tau            τ-b with tie correction (scipy.stats.kendalltau)
  3. topk_overlap           shared nodes of two top-k lists
  4. comparison_report      pairwise τ and overlap matrices over methods
  5. no_hub_floor_violations  zero-degree nodes ranked above the floor

Node ids are 1-based in every returned structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import kendalltau

from hubwalk.config import Config
from hubwalk.errors import RankingError
from hubwalk.models.graph import DirectedGraph, degrees
from hubwalk.models.results import CentralityResult
from hubwalk.utils.logger import setup_logger

logger = setup_logger("RankAnalysis")

SIDES = ("hub", "authority")


@dataclass(frozen=True)
class Ranking:
    """Ordered ex-aequo groups, best first."""

    groups: Tuple[FrozenSet[int], ...]
    tie_tol: float

    @property
    def n(self) -> int:
        return sum(len(g) for g in self.groups)

    def render(self, max_groups: Optional[int] = None) -> str:
        """"4 | 1,2,3 | 5,6,7,8" style text."""
        shown = self.groups if max_groups is None else self.groups[:max_groups]
        text = " | ".join(",".join(str(i) for i in sorted(g)) for g in shown)
        if max_groups is not None and len(self.groups) > max_groups:
            text += " | …"
        return text


@dataclass(frozen=True)
class ComparisonReport:
    methods: Tuple[str, ...]
    side: str
    tau: np.ndarray
    topk_overlap: np.ndarray
    k: int
    top_groups: Tuple[FrozenSet[int], ...] = ()


def _as_scores(scores) -> np.ndarray:
    arr = np.asarray(scores, dtype=float)
    if arr.ndim != 1:
        raise RankingError(f"scores must be a 1-D sequence, got shape {arr.shape}")
    return arr


def _descending_order(scores: np.ndarray) -> np.ndarray:
    """0-based indices by descending score, smaller id first on equal scores."""
    return np.lexsort((np.arange(scores.size), -scores))


def rank_with_ties(scores, tie_tol: float = Config.TIE_TOL) -> Ranking:
    if tie_tol < 0:
        raise RankingError("tie_tol must be non-negative")
    arr = _as_scores(scores)
    if arr.size == 0:
        return Ranking(groups=(), tie_tol=tie_tol)
    order = _descending_order(arr)
    ordered = arr[order]
    breaks = np.flatnonzero(ordered[:-1] - ordered[1:] > tie_tol) + 1
    groups = tuple(frozenset(int(i) + 1 for i in chunk) for chunk in np.split(order, breaks))
    return Ranking(groups=groups, tie_tol=tie_tol)


def ranking_positions(ranking: Ranking) -> np.ndarray:
    """Dense 1-based group position of every node, indexed by node id − 1."""
    positions = np.zeros(ranking.n, dtype=np.int64)
    for rank, group in enumerate(ranking.groups, start=1):
        for node in group:
            positions[node - 1] = rank
    return positions


def kendall_tau(r1, r2) -> float:
    """Kendall τ-b of two equal-length score vectors."""
    a = _as_scores(r1)
    b = _as_scores(r2)
    if a.shape != b.shape:
        raise RankingError(f"length mismatch: {a.size} vs {b.size}")
    if a.size < 2:
        raise RankingError("τ needs at least two nodes")
    if np.all(a == a[0]) or np.all(b == b[0]):
        raise RankingError("τ is undefined when every score in a vector is tied")
    tau = float(kendalltau(a, b, variant="b")[0])
    if np.isnan(tau):
        raise RankingError("τ-b evaluated to NaN")
    return tau


def topk_nodes(scores, k: int) -> List[int]:
    """First k node ids in descending score order.

    Whole tie groups come first; a group straddling position k is cut by
    score, then by smallest id, which is the same walk over the sorted order.
    """
    arr = _as_scores(scores)
    if not 1 <= k <= arr.size:
        raise RankingError(f"k must lie in 1..{arr.size}, got {k}")
    return [int(i) + 1 for i in _descending_order(arr)[:k]]


def topk_overlap(r1, r2, k: int) -> int:
    a = _as_scores(r1)
    b = _as_scores(r2)
    if a.shape != b.shape:
        raise RankingError(f"length mismatch: {a.size} vs {b.size}")
    return len(set(topk_nodes(a, k)) & set(topk_nodes(b, k)))


def grouped_tau(s1, s2, tie_tol: float = Config.TIE_TOL) -> float:
    """τ-b on tie-grouped positions, so scores within tie_tol count as tied."""
    p1 = ranking_positions(rank_with_ties(s1, tie_tol))
    p2 = ranking_positions(rank_with_ties(s2, tie_tol))
    return kendall_tau(-p1, -p2)


def comparison_report(
    results: Sequence[CentralityResult],
    side: str,
    k: int = Config.TOP_K,
    tie_tol: float = Config.TIE_TOL,
) -> ComparisonReport:
    if side not in SIDES:
        raise RankingError(f"side must be one of {SIDES}, got {side!r}")
    if not results:
        raise RankingError("comparison needs at least one result")
    sizes = {r.n for r in results}
    if len(sizes) != 1:
        raise RankingError(f"results cover different graphs (node counts {sorted(sizes)})")
    n = sizes.pop()
    if not 1 <= k <= n:
        raise RankingError(f"k must lie in 1..{n}, got {k}")

    vectors = [r.side(side) for r in results]
    count = len(vectors)
    tau = np.eye(count)
    overlap = np.zeros((count, count), dtype=np.int64)
    for i in range(count):
        overlap[i, i] = k
        for j in range(i + 1, count):
            tau[i, j] = tau[j, i] = grouped_tau(vectors[i], vectors[j], tie_tol)
            overlap[i, j] = overlap[j, i] = topk_overlap(vectors[i], vectors[j], k)

    top_groups = tuple(rank_with_ties(v, tie_tol).groups[0] for v in vectors)
    logger.debug("comparison_report: side=%s methods=%d k=%d", side, count, k)
    return ComparisonReport(
        methods=tuple(r.method for r in results),
        side=side,
        tau=tau,
        topk_overlap=overlap,
        k=k,
        top_groups=top_groups,
    )


def top_node_agreement(report: ComparisonReport) -> np.ndarray:
    """True where two methods put the same tie group first."""
    count = len(report.methods)
    agree = np.ones((count, count), dtype=bool)
    for i in range(count):
        for j in range(count):
            agree[i, j] = report.top_groups[i] == report.top_groups[j]
    return agree


def no_hub_floor_violations(
    result: CentralityResult,
    g: DirectedGraph,
    side: str = "hub",
    tie_tol: float = Config.TIE_TOL,
) -> List[int]:
    """Zero-degree nodes scoring above every positive-degree node by more than tie_tol.

    side="hub" checks zero out-degree, side="authority" zero in-degree.
    """
    if side not in SIDES:
        raise RankingError(f"side must be one of {SIDES}, got {side!r}")
    if result.n != g.n:
        raise RankingError(f"result has {result.n} nodes, graph has {g.n}")
    deg = degrees(g)
    d = deg.out_deg if side == "hub" else deg.in_deg
    scores = result.side(side)
    empty = d == 0
    if not empty.any() or empty.all():
        return []
    floor = float(scores[~empty].min())
    return [int(i) + 1 for i in np.flatnonzero(empty & (scores > floor + tie_tol))]
