"""
hubwalk — Classical Hub/Authority Baselines
=============================================
  HITS              dominant eigenvectors of AAᵀ (hubs) and AᵀA (authorities)
                    by power iteration from the uniform vector, 2-norm scale
  PageRank          stationary vector of Gᵀ, G the Google matrix: authorities
  reverse PageRank  PageRank of the reversed graph: hubs
  BEK               diagonal of exp([[0, A], [Aᵀ, 0]]): hubs then authorities

The power iterations work on the sparse adjacency; dangling rows and
teleportation are applied as rank-one updates instead of forming G.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from hubwalk.config import Config
from hubwalk.errors import ConvergenceError, GraphValidationError
from hubwalk.models.graph import DirectedGraph, bipartite_adjacency
from hubwalk.models.results import CentralityResult
from hubwalk.services.spectral import exp_diag, sym_eig
from hubwalk.utils.logger import setup_logger

logger = setup_logger("ClassicalRank")

DEGENERACY_GAP = 1e-10
_DEFLATION_CAP = 5000


@dataclass(frozen=True)
class IterationConfig:
    tol: float = field(default_factory=lambda: Config.ITER_TOL)
    max_iter: int = field(default_factory=lambda: Config.MAX_ITER)
    alpha: float = field(default_factory=lambda: Config.DEFAULT_ALPHA)

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")


# ──────────────────────────────────────────────────────────────────────
# HITS
# ──────────────────────────────────────────────────────────────────────

def _hits_power(forward, backward, n: int, cfg: IterationConfig) -> Tuple[np.ndarray, int, bool]:
    """Iterate v ← backward(forward(v)) from the uniform vector, 2-normalising both halves."""
    v = np.full(n, 1.0 / np.sqrt(n))
    for iteration in range(1, cfg.max_iter + 1):
        w = forward(v)
        w /= np.linalg.norm(w)
        v_next = backward(w)
        v_next /= np.linalg.norm(v_next)
        change = float(np.max(np.abs(v_next - v)))
        v = v_next
        if change <= cfg.tol:
            return v, iteration, True
    return v, cfg.max_iter, False


def _second_eigenvalue(apply, top_vector: np.ndarray, top_value: float, tol: float) -> float:
    """Rayleigh estimate of the second eigenvalue of a PSD operator by deflated power iteration."""
    rng = np.random.default_rng(0)
    v = rng.standard_normal(top_vector.shape[0])
    v -= top_vector * (top_vector @ v)
    norm = np.linalg.norm(v)
    if norm == 0.0:
        return 0.0
    v /= norm
    estimate = 0.0
    for _ in range(_DEFLATION_CAP):
        w = apply(v)
        w -= top_vector * (top_vector @ w)
        rayleigh = float(v @ w)
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0
        v = w / norm
        if abs(rayleigh - estimate) <= tol * max(1.0, top_value):
            return rayleigh
        estimate = rayleigh
    return estimate


def hits_scores(g: DirectedGraph, cfg: Optional[IterationConfig] = None) -> CentralityResult:
    """Hub = dominant eigenvector of AAᵀ, authority = dominant eigenvector of AᵀA, unit 2-norm.

    Each vector comes from its own power iteration x = Aᵀy, y = Ax started
    at the uniform vector. A degenerate dominant eigenvalue makes the limit
    depend on that start; the result then carries a warning.
    """
    cfg = cfg or IterationConfig()
    if g.edge_count == 0:
        raise GraphValidationError("HITS needs a graph with at least one edge")
    A = g.sparse
    At = A.T.tocsr()
    n = g.n

    hub, hub_iters, hub_ok = _hits_power(lambda y: At @ y, lambda x: A @ x, n, cfg)
    authority, auth_iters, auth_ok = _hits_power(lambda x: A @ x, lambda y: At @ y, n, cfg)

    hub_operator = lambda v: A @ (At @ v)  # noqa: E731
    top_value = float(np.linalg.norm(At @ hub) ** 2)
    second_value = _second_eigenvalue(hub_operator, hub, top_value, cfg.tol)
    degenerate = (top_value - second_value) < DEGENERACY_GAP * max(1.0, top_value)

    warnings = []
    if not (hub_ok and auth_ok):
        warnings.append(f"HITS stopped at max_iter={cfg.max_iter} before reaching tol={cfg.tol:g}")
        logger.warning("HITS did not converge within %d iterations", cfg.max_iter)
    if degenerate:
        warnings.append("dominant eigenvalue of AAᵀ is degenerate; scores depend on the uniform start")
        logger.warning("HITS dominant eigenvalue %.6g is degenerate (second ≈ %.6g)", top_value, second_value)

    return CentralityResult(
        method="hits",
        hub=hub,
        authority=authority,
        normalization="2-norm",
        info={
            "hub_iterations": hub_iters,
            "authority_iterations": auth_iters,
            "converged": hub_ok and auth_ok,
            "dominant_eigenvalue": top_value,
            "second_eigenvalue": second_value,
            "degenerate": degenerate,
        },
        warnings=tuple(warnings),
    )


# ──────────────────────────────────────────────────────────────────────
# PageRank
# ──────────────────────────────────────────────────────────────────────

def pagerank_scores(g: DirectedGraph, cfg: Optional[IterationConfig] = None) -> np.ndarray:
    """Stationary vector of Gᵀ (authority scores), summing to 1."""
    cfg = cfg or IterationConfig()
    n = g.n
    A = g.sparse
    out_deg = np.asarray(A.sum(axis=1)).ravel()
    dangling = out_deg == 0
    inv_deg = np.zeros(n)
    inv_deg[~dangling] = 1.0 / out_deg[~dangling]
    At = A.T.tocsr()
    alpha = cfg.alpha

    x = np.full(n, 1.0 / n)
    for iteration in range(1, cfg.max_iter + 1):
        # Gᵀx = α(Ãᵀx) + (1−α)/n·Σx, with dangling rows of Ã uniform
        walk = At @ (x * inv_deg) + x[dangling].sum() / n
        x_next = alpha * walk + (1.0 - alpha) * x.sum() / n
        x_next /= x_next.sum()
        change = float(np.max(np.abs(x_next - x)))
        x = x_next
        if change <= cfg.tol:
            logger.debug("PageRank converged in %d iterations", iteration)
            return x
    raise ConvergenceError(
        f"PageRank power iteration did not converge in {cfg.max_iter} iterations", iterations=cfg.max_iter
    )


def reverse_pagerank_scores(g: DirectedGraph, cfg: Optional[IterationConfig] = None) -> np.ndarray:
    """PageRank of the reversed graph (hub scores)."""
    return pagerank_scores(g.reversed(), cfg)


def pagerank_result(g: DirectedGraph, cfg: Optional[IterationConfig] = None) -> CentralityResult:
    cfg = cfg or IterationConfig()
    return CentralityResult(
        method="pagerank",
        hub=reverse_pagerank_scores(g, cfg),
        authority=pagerank_scores(g, cfg),
        normalization="1-norm (probability vector per side)",
        info={"alpha": cfg.alpha},
    )


# ──────────────────────────────────────────────────────────────────────
# Exponential (BEK)
# ──────────────────────────────────────────────────────────────────────

def bek_scores(g: DirectedGraph) -> CentralityResult:
    diagonal = exp_diag(sym_eig(bipartite_adjacency(g).matrix))
    return CentralityResult(
        method="bek",
        hub=diagonal[: g.n],
        authority=diagonal[g.n:],
        normalization="none (raw diagonal of exp)",
    )
