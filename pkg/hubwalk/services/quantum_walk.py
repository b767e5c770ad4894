"""
hubwalk — Continuous-Time Quantum Walk Centrality
===================================================
Hub and authority scores from the long-time average of a unitary walk on
the 2n-node bipartite graph of a directed network.

  CQAu   H = [[0, Ã], [Ãᵀ, 0]], Ã = αA + (1−α)/n·𝟙𝟙ᵀ, uniform start
  CQAw   same H, start amplitudes √(degree) of the bipartite node
  CQG    H_a from the Google matrix of A (authorities) and H_h from the
         Google matrix of Aᵀ (hubs); uniform start; scores read from the
         lower half of each walk

The limit of (1/T)∫|⟨m|ψ(t)⟩|²dt is evaluated in closed form: cross terms
between different energies average out, so the occupation of basis state m
is Σ_groups (Σ_{j∈group} a_j Φ[m,j])² with a = Φᵀψ₀.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from hubwalk.config import Config
from hubwalk.errors import InvalidStateError
from hubwalk.models.graph import DirectedGraph, degrees
from hubwalk.models.results import CentralityResult
from hubwalk.services.spectral import UNIT_NORM_TOL, group_degenerate, sym_eig
from hubwalk.utils.logger import setup_logger

logger = setup_logger("QuantumWalk")


class Recipe(str, Enum):
    CQA = "CQA"
    CQG_AUTHORITY = "CQG-authority"
    CQG_HUB = "CQG-hub"


@dataclass(frozen=True)
class WalkConfig:
    alpha: float = field(default_factory=lambda: Config.DEFAULT_ALPHA)
    degeneracy_rel_tol: float = field(default_factory=lambda: Config.DEGENERACY_REL_TOL)

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")
        if self.degeneracy_rel_tol <= 0:
            raise ValueError("degeneracy_rel_tol must be positive")


@dataclass(frozen=True)
class Hamiltonian:
    dim: int
    matrix: np.ndarray
    recipe: Recipe

    @property
    def n(self) -> int:
        return self.dim // 2

    @property
    def block(self) -> np.ndarray:
        """Upper-right n×n block."""
        return self.matrix[: self.n, self.n:]


@dataclass(frozen=True)
class InitialState:
    amplitudes: np.ndarray
    kind: str

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=float)
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > UNIT_NORM_TOL:
            raise InvalidStateError(f"{self.kind} initial state has norm {norm:.12g}, expected 1")
        object.__setattr__(self, "amplitudes", amps)


# ──────────────────────────────────────────────────────────────────────
# Matrices
# ──────────────────────────────────────────────────────────────────────

def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")


def rank_one_correction(A, alpha: float) -> np.ndarray:
    """αA + ((1−α)/n)·𝟙𝟙ᵀ. No row normalisation, no dangling patch."""
    _check_alpha(alpha)
    a = np.asarray(A, dtype=float)
    n = a.shape[0]
    return alpha * a + (1.0 - alpha) / n


def google_matrix(A, alpha: float) -> np.ndarray:
    """Row-stochastic Google matrix: rows patched to A/out_deg (uniform when dangling), then teleportation."""
    _check_alpha(alpha)
    a = np.asarray(A, dtype=float)
    n = a.shape[0]
    out_deg = a.sum(axis=1)
    patched = np.full((n, n), 1.0 / n)
    linked = out_deg > 0
    patched[linked] = a[linked] / out_deg[linked, None]
    return alpha * patched + (1.0 - alpha) / n


def _bipartite_block(M: np.ndarray) -> np.ndarray:
    n = M.shape[0]
    H = np.zeros((2 * n, 2 * n), dtype=float)
    H[:n, n:] = M
    H[n:, :n] = M.T
    return H


def build_cqa_hamiltonian(g: DirectedGraph, cfg: Optional[WalkConfig] = None) -> Hamiltonian:
    cfg = cfg or WalkConfig()
    block = rank_one_correction(g.adjacency, cfg.alpha)
    return Hamiltonian(dim=2 * g.n, matrix=_bipartite_block(block), recipe=Recipe.CQA)


def build_cqg_hamiltonians(g: DirectedGraph, cfg: Optional[WalkConfig] = None) -> Tuple[Hamiltonian, Hamiltonian]:
    """(H_a, H_h): Google matrices of A and of Aᵀ, each bipartized. G_r is not Gᵀ in general."""
    cfg = cfg or WalkConfig()
    G = google_matrix(g.adjacency, cfg.alpha)
    G_r = google_matrix(g.adjacency.T, cfg.alpha)
    h_auth = Hamiltonian(dim=2 * g.n, matrix=_bipartite_block(G), recipe=Recipe.CQG_AUTHORITY)
    h_hub = Hamiltonian(dim=2 * g.n, matrix=_bipartite_block(G_r), recipe=Recipe.CQG_HUB)
    return h_auth, h_hub


# ──────────────────────────────────────────────────────────────────────
# Initial states
# ──────────────────────────────────────────────────────────────────────

def initial_uniform(n: int) -> InitialState:
    if n < 1:
        raise InvalidStateError("uniform state needs at least one node")
    return InitialState(amplitudes=np.full(2 * n, 1.0 / np.sqrt(2 * n)), kind="uniform")


def initial_degree_weighted(g: DirectedGraph) -> InitialState:
    """Amplitudes √(d_k/Σd): out-degrees on the hub side, in-degrees on the authority side, from raw A."""
    deg = degrees(g)
    d = np.concatenate([deg.out_deg, deg.in_deg]).astype(float)
    total = d.sum()
    if total <= 0:
        raise InvalidStateError("degree-weighted state is undefined for a graph without edges")
    return InitialState(amplitudes=np.sqrt(d / total), kind="degree-weighted")


# ──────────────────────────────────────────────────────────────────────
# Long-time average
# ──────────────────────────────────────────────────────────────────────

def limiting_occupation(H, psi0, cfg: Optional[WalkConfig] = None) -> np.ndarray:
    """Closed-form T→∞ average occupation of every basis state."""
    cfg = cfg or WalkConfig()
    psi = np.asarray(getattr(psi0, "amplitudes", psi0), dtype=float)
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise InvalidStateError(f"initial state has norm {norm:.12g}, expected 1")
    eig = sym_eig(H)
    if psi.shape != (eig.dim,):
        raise InvalidStateError(f"state has length {psi.shape[0]}, Hamiltonian has dim {eig.dim}")
    coeffs = eig.eigenvectors.T @ psi
    groups = group_degenerate(eig, cfg.degeneracy_rel_tol)
    order = np.fromiter((i for grp in groups.groups for i in grp), dtype=np.intp, count=eig.dim)
    starts = np.cumsum((0,) + groups.sizes[:-1])
    weighted = eig.eigenvectors[:, order] * coeffs[order]
    # column block k holds the projection of ψ₀ onto energy group k
    projections = np.add.reduceat(weighted, starts, axis=1)
    occupation = np.einsum("mk,mk->m", projections, projections)
    logger.debug(
        "limiting_occupation: dim=%d groups=%d largest=%d",
        eig.dim, len(groups), max(groups.sizes),
    )
    return occupation


def _walk_result(method: str, hub, authority, normalization: str, **info) -> CentralityResult:
    return CentralityResult(
        method=method,
        hub=hub,
        authority=authority,
        normalization=normalization,
        info=info,
    )


def cqau_scores(g: DirectedGraph, cfg: Optional[WalkConfig] = None) -> CentralityResult:
    cfg = cfg or WalkConfig()
    occupation = limiting_occupation(build_cqa_hamiltonian(g, cfg), initial_uniform(g.n), cfg)
    return _walk_result(
        "cqau", occupation[: g.n], occupation[g.n:],
        "time-averaged occupation; hub + authority sum to 1", alpha=cfg.alpha,
    )


def cqaw_scores(g: DirectedGraph, cfg: Optional[WalkConfig] = None) -> CentralityResult:
    cfg = cfg or WalkConfig()
    occupation = limiting_occupation(build_cqa_hamiltonian(g, cfg), initial_degree_weighted(g), cfg)
    return _walk_result(
        "cqaw", occupation[: g.n], occupation[g.n:],
        "time-averaged occupation; hub + authority sum to 1", alpha=cfg.alpha,
    )


def cqg_scores(g: DirectedGraph, cfg: Optional[WalkConfig] = None) -> CentralityResult:
    """Two walks: authorities from H_a, hubs from H_h, both read from the lower half."""
    cfg = cfg or WalkConfig()
    h_auth, h_hub = build_cqg_hamiltonians(g, cfg)
    start = initial_uniform(g.n)
    with ThreadPoolExecutor(max_workers=2, thread_name_prefix="cqg") as pool:
        auth_future = pool.submit(limiting_occupation, h_auth, start, cfg)
        hub_future = pool.submit(limiting_occupation, h_hub, start, cfg)
        auth_occupation = auth_future.result()
        hub_occupation = hub_future.result()
    return _walk_result(
        "cqg", hub_occupation[g.n:], auth_occupation[g.n:],
        "lower-half occupation of two separate walks", alpha=cfg.alpha,
    )
