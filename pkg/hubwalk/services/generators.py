"""
hubwalk — Graph Generators
===========================
Deterministic toy graphs used by the reference tables, and the directed
scale-free preferential-attachment model used for the random experiments.

  path_graph(n)          1→2→…→n
  diamond_graph(n)       1→j→n for j = 2..n−1
  star_graph(n)          1→j for j = 2..n
  tailed_graph(n1, n2)   path on 1..n1, n1 fans out to a complete digraph on n2 nodes
  example5_graph()       4 nodes whose bipartite graph splits into 3 components
  scale_free(n, params)  networkx.scale_free_graph (numpy loop when a probability is 0),
                         loops stripped, multi-edges collapsed
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from hubwalk.errors import GeneratorParameterError, GraphValidationError
from hubwalk.models.graph import DirectedGraph, from_edges
from hubwalk.utils.logger import setup_logger

logger = setup_logger("Generators")

_PROB_SUM_TOL = 1e-12


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphValidationError(message)


def path_graph(n: int) -> DirectedGraph:
    _require(n >= 2, f"path graph needs n >= 2, got {n}")
    return from_edges(n, [(i, i + 1) for i in range(1, n)], meta={"source": f"path:{n}"})


def diamond_graph(n: int) -> DirectedGraph:
    _require(n >= 3, f"diamond graph needs n >= 3, got {n}")
    edges = [(1, j) for j in range(2, n)] + [(j, n) for j in range(2, n)]
    return from_edges(n, edges, meta={"source": f"diamond:{n}"})


def star_graph(n: int) -> DirectedGraph:
    _require(n >= 2, f"star graph needs n >= 2, got {n}")
    return from_edges(n, [(1, j) for j in range(2, n + 1)], meta={"source": f"star:{n}"})


def tailed_graph(n1: int, n2: int) -> DirectedGraph:
    """Path 1..n1 whose last node points into a complete digraph on n1+1..n1+n2."""
    _require(n1 >= 1, f"tail length n1 must be >= 1, got {n1}")
    _require(n2 >= 2, f"clique size n2 must be >= 2, got {n2}")
    clique = range(n1 + 1, n1 + n2 + 1)
    edges: List[Tuple[int, int]] = [(i, i + 1) for i in range(1, n1)]
    edges += [(n1, j) for j in clique]
    edges += [(i, j) for i in clique for j in clique if i != j]
    return from_edges(n1 + n2, edges, meta={"source": f"tailed:{n1},{n2}"})


def example5_graph() -> DirectedGraph:
    # Bipartite components {1′,3″}, {2′,1″,4″}, {3′,4′,2″}; swapping 1 and 3 maps it onto its reversal.
    edges = [(1, 3), (2, 1), (2, 4), (3, 2), (4, 2)]
    return from_edges(4, edges, meta={"source": "example5"})


# ──────────────────────────────────────────────────────────────────────
# Scale-free model
# ──────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class ScaleFreeParams:
    """Attachment probabilities of the directed scale-free process.

    alpha_g: add a new node with an edge to an existing node chosen by in-degree
    beta_g:  add an edge between existing nodes (out-degree source, in-degree target)
    gamma_g: add a new node with an edge from an existing node chosen by out-degree

    With delta_in = 0 a node that never receives an edge can never be chosen
    as a target, so nodes entering through alpha steps stay authority-free.
    """

    alpha_g: float
    beta_g: float
    gamma_g: float
    delta_in: float = 0.0
    delta_out: float = 0.0
    seed: int = field(default=0)

    def __post_init__(self):
        probs = (self.alpha_g, self.beta_g, self.gamma_g)
        if any(p < 0.0 or p > 1.0 for p in probs):
            raise GeneratorParameterError(f"attachment probabilities must lie in [0, 1], got {probs}")
        if abs(sum(probs) - 1.0) > _PROB_SUM_TOL:
            raise GeneratorParameterError(f"alpha_g + beta_g + gamma_g must equal 1, got {sum(probs)!r}")
        if self.delta_in < 0 or self.delta_out < 0:
            raise GeneratorParameterError("delta_in and delta_out must be non-negative")
        if self.beta_g == 1.0:
            raise GeneratorParameterError("beta_g = 1 never adds nodes")

    @property
    def has_zero_probability(self) -> bool:
        return min(self.alpha_g, self.beta_g, self.gamma_g) == 0.0

    def describe(self) -> str:
        text = f"scalefree(alpha={self.alpha_g:g}, beta={self.beta_g:g}, gamma={self.gamma_g:g}"
        if self.delta_in or self.delta_out:
            text += f", delta_in={self.delta_in:g}, delta_out={self.delta_out:g}"
        return text + f", seed={self.seed})"


# Both growth paths start from the directed 3-cycle 0→1→2→0.
_SEED_CYCLE = ((0, 1), (1, 2), (2, 0))


def _networkx_edges(n_target: int, p: ScaleFreeParams) -> List[Tuple[int, int]]:
    try:
        multigraph = nx.scale_free_graph(
            n_target,
            alpha=p.alpha_g,
            beta=p.beta_g,
            gamma=p.gamma_g,
            delta_in=p.delta_in,
            delta_out=p.delta_out,
            seed=p.seed,
        )
    except (ValueError, nx.NetworkXError) as e:
        raise GeneratorParameterError(f"scale-free generator rejected {p.describe()}: {e}") from e
    return [(int(u), int(v)) for u, v in multigraph.edges()]


def _attachment_edges(n_target: int, p: ScaleFreeParams) -> List[Tuple[int, int]]:
    """Same growth process on numpy arrays; networkx refuses zero probabilities."""
    rng = np.random.default_rng(p.seed)
    in_deg = np.zeros(n_target, dtype=float)
    out_deg = np.zeros(n_target, dtype=float)
    edges = list(_SEED_CYCLE)
    for u, v in edges:
        out_deg[u] += 1
        in_deg[v] += 1
    size = 3

    def pick(deg: np.ndarray, delta: float) -> int:
        weights = deg[:size] + delta
        return int(rng.choice(size, p=weights / weights.sum()))

    while size < n_target:
        r = rng.random()
        if r < p.alpha_g:
            u, v = size, pick(in_deg, p.delta_in)
            size += 1
        elif r < p.alpha_g + p.beta_g:
            u, v = pick(out_deg, p.delta_out), pick(in_deg, p.delta_in)
        else:
            u, v = pick(out_deg, p.delta_out), size
            size += 1
        out_deg[u] += 1
        in_deg[v] += 1
        edges.append((u, v))
    return edges


def scale_free(n_target: int, p: ScaleFreeParams) -> DirectedGraph:
    """Grow a directed scale-free multigraph to n_target nodes, then binarize it."""
    if n_target < 3:
        raise GeneratorParameterError(f"scale-free graph needs at least 3 nodes, got {n_target}")
    if p.has_zero_probability:
        raw = _attachment_edges(n_target, p)
        backend = "numpy"
    else:
        raw = _networkx_edges(n_target, p)
        backend = "networkx"

    loops = 0
    edges = set()
    for u, v in raw:
        if u == v:
            loops += 1
            continue
        edges.add((u + 1, v + 1))

    meta: Dict[str, Any] = {
        "source": p.describe(),
        "backend": backend,
        "dropped_self_loops": loops,
        "duplicate_edges": len(raw) - loops - len(edges),
    }
    g = from_edges(n_target, sorted(edges), meta=meta)
    logger.info(
        "scale_free[%s]: n=%d raw_edges=%d edges=%d loops=%d",
        backend, n_target, len(raw), g.edge_count, loops,
    )
    return g


# ──────────────────────────────────────────────────────────────────────
# Generator specs ("path:4", "tailed:4,4", "scalefree:128,0.4,0.55,0.05")
# ──────────────────────────────────────────────────────────────────────

# name -> number of integer parameters, number of required real parameters, number of optional real parameters
_SPEC_ARITY: Dict[str, Tuple[int, int, int]] = {
    "path": (1, 0, 0),
    "diamond": (1, 0, 0),
    "star": (1, 0, 0),
    "tailed": (2, 0, 0),
    "example5": (0, 0, 0),
    "scalefree": (1, 3, 2),  # n, alpha, beta, gamma[, delta_in[, delta_out]]
}

GENERATOR_NAMES = tuple(_SPEC_ARITY)


def parse_generator_spec(spec: str) -> Tuple[str, Tuple[Any, ...]]:
    """Split a generator spec into its name and typed parameters."""
    name, _, raw = spec.strip().partition(":")
    name = name.strip().lower()
    if name not in _SPEC_ARITY:
        raise GeneratorParameterError(f"unknown generator {name!r}; choose from {', '.join(GENERATOR_NAMES)}")
    n_int, n_real, n_optional = _SPEC_ARITY[name]
    parts = [p.strip() for p in raw.split(",")] if raw.strip() else []
    required = n_int + n_real
    if not required <= len(parts) <= required + n_optional:
        expected = str(required) if not n_optional else f"{required} to {required + n_optional}"
        raise GeneratorParameterError(
            f"generator {name!r} takes {expected} parameter(s), got {len(parts)} in {spec!r}"
        )
    try:
        params = tuple(int(p) for p in parts[:n_int]) + tuple(float(p) for p in parts[n_int:])
    except ValueError:
        raise GeneratorParameterError(f"malformed parameters in generator spec {spec!r}")
    return name, params


def generate_from_spec(spec: str, seed: Optional[int] = None) -> DirectedGraph:
    name, params = parse_generator_spec(spec)
    if name == "path":
        return path_graph(*params)
    if name == "diamond":
        return diamond_graph(*params)
    if name == "star":
        return star_graph(*params)
    if name == "tailed":
        return tailed_graph(*params)
    if name == "example5":
        return example5_graph()
    n_target, *probs_and_deltas = params
    sf = ScaleFreeParams(*probs_and_deltas, seed=0 if seed is None else seed)
    return scale_free(n_target, sf)
