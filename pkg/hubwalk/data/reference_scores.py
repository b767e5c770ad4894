"""
Reference Scores — Toy Graph Tables
=====================================
Published 5-decimal hub scores for the four toy graphs and the tie-group
rankings of the tailed graph (n1 = n2 = 4). Used by `hubwalk reproduce`
and by the golden tests.

Structure:
    HUB_SCORES[example][method] = (score of node 1, node 2, ...)
    AUTHORITY_SCORES  — same layout, derived from HUB_SCORES by the
                        relabeling rule of each example unless listed
    TAILED_HUB_GROUPS[method] = ((ids...), (ids...), ...)  best group first
    TAILED_AUTHORITY_GROUPS   — same for authorities

Methods use the CLI ids: cqau, cqaw, cqg, hits, bek, pagerank. For
pagerank the hub column is reverse PageRank.
"""

from typing import Dict, Tuple

Vector = Tuple[float, ...]

EXAMPLES = ("path", "diamond", "star", "example5")

# generator spec accepted by `hubwalk generate`
EXAMPLE_SPECS = {
    "path": "path:4",
    "diamond": "diamond:5",
    "star": "star:4",
    "example5": "example5",
}

HUB_SCORES: Dict[str, Dict[str, Vector]] = {
    "path": {
        "cqau": (0.13413, 0.13413, 0.13413, 0.09760),
        "cqaw": (0.16505, 0.16505, 0.16505, 0.00484),
        "cqg": (0.15201, 0.15201, 0.15201, 0.04396),
        "hits": (0.57735, 0.57735, 0.57735, 0.00000),
        "bek": (1.54308, 1.54308, 1.54308, 1.00000),
        "pagerank": (0.37015, 0.29881, 0.21489, 0.11616),
    },
    "diamond": {
        "cqau": (0.20273, 0.07000, 0.07000, 0.07000, 0.08728),
        "cqaw": (0.24431, 0.08477, 0.08477, 0.08477, 0.00139),
        "cqg": (0.26238, 0.07029, 0.07029, 0.07029, 0.02674),
        "hits": (0.50000, 0.50000, 0.50000, 0.50000, 0.00000),
        "bek": (2.91458, 1.63819, 1.63819, 1.63819, 1.00000),
        "pagerank": (0.46835, 0.14068, 0.14068, 0.14068, 0.10962),
    },
    "star": {
        "cqau": (0.27227, 0.07591, 0.07591, 0.07591),
        "cqaw": (0.49571, 0.00143, 0.00143, 0.00143),
        "cqg": (0.31268, 0.06244, 0.06244, 0.06244),
        "hits": (1.00000, 0.00000, 0.00000, 0.00000),
        "bek": (2.91458, 1.00000, 1.00000, 1.00000),
        "pagerank": (0.54198, 0.15267, 0.15267, 0.15267),
    },
    "example5": {
        "cqau": (0.07612, 0.20871, 0.10758, 0.10758),
        "cqaw": (0.05714, 0.21788, 0.11249, 0.11249),
        "cqg": (0.12551, 0.25990, 0.05730, 0.05730),
        "hits": (0.00001, 0.57735, 0.57735, 0.57735),
        "bek": (1.54308, 2.17818, 1.58909, 1.58909),
        "pagerank": (0.20916, 0.38694, 0.20195, 0.20195),
    },
}

# Node relabeling that maps the graph onto its own reversal: authority of
# node i equals the hub score of node PERMUTATIONS[example][i - 1].
PERMUTATIONS: Dict[str, Tuple[int, ...]] = {
    "path": (4, 3, 2, 1),
    "diamond": (5, 2, 3, 4, 1),
    "example5": (3, 2, 1, 4),
}

_STAR_AUTHORITY: Dict[str, Vector] = {
    "cqau": (0.22752, 0.09083, 0.09083, 0.09083),
    "cqaw": (0.00193, 0.16602, 0.16602, 0.16602),
    "cqg": (0.07733, 0.14089, 0.14089, 0.14089),
    "hits": (0.00000, 0.57735, 0.57735, 0.57735),
    "bek": (1.00000, 1.63819, 1.63819, 1.63819),
    "pagerank": (0.20618, 0.26461, 0.26461, 0.26461),
}


def _permuted(example: str) -> Dict[str, Vector]:
    perm = PERMUTATIONS[example]
    return {
        method: tuple(hub[p - 1] for p in perm)
        for method, hub in HUB_SCORES[example].items()
    }


AUTHORITY_SCORES: Dict[str, Dict[str, Vector]] = {
    "path": _permuted("path"),
    "diamond": _permuted("diamond"),
    "star": _STAR_AUTHORITY,
    "example5": _permuted("example5"),
}

DEFAULT_TOLERANCE = 5e-5
REFERENCE_ALPHA = 0.85

# Entries printed as "0.00001" are a finite-iteration artifact of a
# degenerate HITS spectrum; the limit is 0.
TOLERANCE_OVERRIDES: Dict[Tuple[str, str, str, int], float] = {
    ("example5", "hits", "hub", 1): 1e-4,
    ("example5", "hits", "authority", 3): 1e-4,
}


def tolerance_for(example: str, method: str, side: str, node: int, default: float = DEFAULT_TOLERANCE) -> float:
    return TOLERANCE_OVERRIDES.get((example, method, side, node), default)


TAILED_SIZES = (4, 4)

TAILED_HUB_GROUPS: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    "cqau": ((4,), (1, 2, 3), (5, 6, 7, 8)),
    "cqaw": ((4,), (5, 6, 7, 8), (1, 2, 3)),
    "cqg": ((1, 2, 3), (4,), (5, 6, 7, 8)),
    "hits": ((4,), (5, 6, 7, 8), (1, 2, 3)),
    "bek": ((4,), (5, 6, 7, 8), (1, 2, 3)),
    "pagerank": ((1,), (2,), (3,), (4,), (5, 6, 7, 8)),
}

TAILED_AUTHORITY_GROUPS: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    "cqau": ((5, 6, 7, 8), (2, 3, 4), (1,)),
    "cqaw": ((5, 6, 7, 8), (2, 3, 4), (1,)),
    "cqg": ((5, 6, 7, 8), (1,), (2, 3, 4)),
    "hits": ((5, 6, 7, 8), (1, 2, 3, 4)),
    "bek": ((5, 6, 7, 8), (2, 3, 4), (1,)),
    "pagerank": ((5, 6, 7, 8), (4,), (3,), (2,), (1,)),
}
