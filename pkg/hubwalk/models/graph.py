"""
hubwalk — Directed Graph Model
===============================
Immutable directed-graph value type plus the structural operations every
centrality method builds on:

  1. Construction      — from an edge list or a 0/1 adjacency matrix
  2. Degrees           — out-degree (row sums) and in-degree (column sums)
  3. Bipartization     — the 2n-node undirected graph [[0, A], [Aᵀ, 0]]
  4. Components        — connected components of the bipartite graph and
                         weak connectivity of the directed graph
  5. Summary           — key/value metadata block for the `info` command

Node ids are 1-based at this boundary (as in the printed tables) and
0-based inside every array.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from hubwalk.errors import GraphValidationError


@dataclass(frozen=True, eq=False)
class DirectedGraph:
    """Unweighted, loop-free directed graph on nodes 1..n."""

    n: int
    adjacency: np.ndarray
    labels: Optional[Tuple[str, ...]] = None
    meta: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise GraphValidationError(f"node count must be a positive integer, got {self.n!r}")
        adj = np.asarray(self.adjacency)
        if adj.shape != (self.n, self.n):
            raise GraphValidationError(f"adjacency shape {adj.shape} does not match n={self.n}")
        if not np.isin(adj, (0, 1)).all():
            raise GraphValidationError("adjacency entries must be exactly 0 or 1")
        if np.any(np.diag(adj) != 0):
            loops = [int(i) + 1 for i in np.flatnonzero(np.diag(adj))]
            raise GraphValidationError(f"self-loops are not allowed (nodes {loops})")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphValidationError(f"expected {self.n} labels, got {len(self.labels)}")
        frozen = np.array(adj, dtype=np.int8, copy=True)
        frozen.setflags(write=False)
        object.__setattr__(self, "adjacency", frozen)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "meta", dict(self.meta))

    # ── Views ────────────────────────────────────────────────────────

    @cached_property
    def sparse(self) -> sp.csr_matrix:
        """CSR copy of the adjacency as float64; same entries as the dense contract."""
        return sp.csr_matrix(self.adjacency, dtype=float)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum())

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield (source, target) pairs, 1-based, in row-major order."""
        rows, cols = np.nonzero(self.adjacency)
        for i, j in zip(rows, cols):
            yield int(i) + 1, int(j) + 1

    def label(self, node: int) -> str:
        """Display name of 1-based *node*."""
        if self.labels is None:
            return str(node)
        return self.labels[node - 1]

    def reversed(self) -> "DirectedGraph":
        """Graph with every edge flipped (adjacency Aᵀ)."""
        return DirectedGraph(
            n=self.n,
            adjacency=self.adjacency.T,
            labels=self.labels,
            meta={**self.meta, "reversed": True},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency.tobytes()))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True)
class DegreeVector:
    out_deg: np.ndarray
    in_deg: np.ndarray

    @property
    def total_edges(self) -> int:
        return int(self.out_deg.sum())


@dataclass(frozen=True)
class BipartiteAdjacency:
    """Adjacency of the undirected bipartite graph: hub copies 1..n, authority copies n+1..2n."""

    size: int
    matrix: np.ndarray

    @property
    def n(self) -> int:
        return self.size // 2


# ──────────────────────────────────────────────────────────────────────
# Operations
# ──────────────────────────────────────────────────────────────────────

def from_edges(
    n: int,
    edges: Iterable[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    meta: Optional[Mapping[str, Any]] = None,
) -> DirectedGraph:
    """Build a graph from 1-based (source, target) pairs. Duplicates collapse to one edge."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise GraphValidationError(f"node count must be a positive integer, got {n!r}")
    adjacency = np.zeros((n, n), dtype=np.int8)
    duplicates = 0
    for pair in edges:
        if len(pair) != 2:
            raise GraphValidationError(f"edge must be a (source, target) pair, got {pair!r}")
        src, dst = int(pair[0]), int(pair[1])
        if not (1 <= src <= n and 1 <= dst <= n):
            raise GraphValidationError(f"edge ({src}, {dst}) has an id outside 1..{n}")
        if src == dst:
            raise GraphValidationError(f"self-loop on node {src}")
        if adjacency[src - 1, dst - 1]:
            duplicates += 1
        adjacency[src - 1, dst - 1] = 1
    info = dict(meta or {})
    info.setdefault("duplicate_edges", duplicates)
    return DirectedGraph(n=n, adjacency=adjacency, labels=tuple(labels) if labels is not None else None, meta=info)


def from_adjacency(matrix, labels: Optional[Sequence[str]] = None) -> DirectedGraph:
    adj = np.asarray(matrix)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise GraphValidationError(f"adjacency must be square, got shape {adj.shape}")
    return DirectedGraph(n=adj.shape[0], adjacency=adj, labels=tuple(labels) if labels is not None else None)


def degrees(g: DirectedGraph) -> DegreeVector:
    out_deg = g.adjacency.sum(axis=1, dtype=np.int64)
    in_deg = g.adjacency.sum(axis=0, dtype=np.int64)
    return DegreeVector(out_deg=out_deg, in_deg=in_deg)


def bipartite_adjacency(g: DirectedGraph) -> BipartiteAdjacency:
    n = g.n
    a = g.adjacency.astype(float)
    matrix = np.zeros((2 * n, 2 * n), dtype=float)
    matrix[:n, n:] = a
    matrix[n:, :n] = a.T
    return BipartiteAdjacency(size=2 * n, matrix=matrix)


def connected_components_undirected(b: BipartiteAdjacency) -> List[frozenset]:
    """Maximal connected sets of the symmetric adjacency, as 1-based flat ids.

    Components are ordered by their smallest member.
    """
    _, labels = connected_components(sp.csr_matrix(b.matrix), directed=False)
    members: Dict[int, set] = {}
    for index, comp in enumerate(labels):
        members.setdefault(int(comp), set()).add(index + 1)
    components = [frozenset(m) for m in members.values()]
    components.sort(key=min)
    return components


def is_weakly_connected(g: DirectedGraph) -> bool:
    count, _ = connected_components(g.sparse, directed=True, connection="weak")
    return count == 1


def graph_summary(g: DirectedGraph) -> Dict[str, Any]:
    """Ordered key/value metadata block describing *g*."""
    deg = degrees(g)
    components = connected_components_undirected(bipartite_adjacency(g))
    summary: Dict[str, Any] = {
        "n": g.n,
        "edges": g.edge_count,
        "dangling": int(np.count_nonzero(deg.out_deg == 0)),
        "sources": int(np.count_nonzero(deg.in_deg == 0)),
        "weakly_connected": is_weakly_connected(g),
        "bipartite_components": len(components),
    }
    for key in ("dropped_self_loops", "duplicate_edges", "source"):
        if key in g.meta:
            summary[key] = g.meta[key]
    return summary
