import numpy as np
import pytest

from hubwalk.models.graph import DirectedGraph, from_adjacency
from hubwalk.services.generators import (
    diamond_graph,
    example5_graph,
    path_graph,
    star_graph,
    tailed_graph,
)


def random_graph(rng: np.random.Generator, n: int, p: float) -> DirectedGraph:
    """Erdős–Rényi digraph with at least one edge."""
    while True:
        adj = (rng.random((n, n)) < p).astype(np.int8)
        np.fill_diagonal(adj, 0)
        if adj.any():
            return from_adjacency(adj)


@pytest.fixture
def path4():
    return path_graph(4)


@pytest.fixture
def diamond5():
    return diamond_graph(5)


@pytest.fixture
def star4():
    return star_graph(4)


@pytest.fixture
def tailed44():
    return tailed_graph(4, 4)


@pytest.fixture
def ex5():
    return example5_graph()


@pytest.fixture
def toy_graphs():
    return {
        "path": path_graph(4),
        "diamond": diamond_graph(5),
        "star": star_graph(4),
        "tailed": tailed_graph(4, 4),
        "example5": example5_graph(),
    }
