import networkx as nx
import numpy as np
import pytest

from hubwalk.errors import GeneratorParameterError, GraphValidationError
from hubwalk.models.graph import bipartite_adjacency, connected_components_undirected, degrees
from hubwalk.services.generators import (
    GENERATOR_NAMES,
    ScaleFreeParams,
    diamond_graph,
    example5_graph,
    generate_from_spec,
    parse_generator_spec,
    path_graph,
    scale_free,
    star_graph,
    tailed_graph,
)
from hubwalk.services.rank_analysis import topk_nodes


class TestToyGraphs:
    def test_path(self):
        assert list(path_graph(4).edges()) == [(1, 2), (2, 3), (3, 4)]

    def test_diamond(self):
        g = diamond_graph(5)
        assert list(g.edges()) == [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)]
        assert degrees(g).in_deg.tolist() == [0, 1, 1, 1, 3]

    def test_star(self):
        g = star_graph(4)
        assert g.edge_count == 3
        assert degrees(g).out_deg.tolist() == [3, 0, 0, 0]

    @pytest.mark.parametrize("n1,n2", [(1, 2), (2, 3), (4, 4), (3, 6)])
    def test_tailed_edge_count(self, n1, n2):
        g = tailed_graph(n1, n2)
        assert g.n == n1 + n2
        assert g.edge_count == (n1 - 1) + n2 + n2 * (n2 - 1)

    def test_tailed_smallest(self):
        assert list(tailed_graph(1, 2).edges()) == [(1, 2), (1, 3), (2, 3), (3, 2)]

    def test_example5(self):
        g = example5_graph()
        assert list(g.edges()) == [(1, 3), (2, 1), (2, 4), (3, 2), (4, 2)]
        assert nx.is_strongly_connected(nx.DiGraph(list(g.edges())))
        assert len(connected_components_undirected(bipartite_adjacency(g))) == 3

    def test_source_meta(self):
        assert tailed_graph(4, 4).meta["source"] == "tailed:4,4"

    @pytest.mark.parametrize("build", [
        lambda: path_graph(1),
        lambda: diamond_graph(2),
        lambda: star_graph(1),
        lambda: tailed_graph(0, 3),
        lambda: tailed_graph(2, 1),
    ])
    def test_invalid_sizes(self, build):
        with pytest.raises(GraphValidationError):
            build()


class TestScaleFreeParams:
    @pytest.mark.parametrize("probs", [
        (0.5, 0.5, 0.5),
        (-0.1, 1.0, 0.1),
        (0.4, 0.55, 0.04),
        (0.0, 1.0, 0.0),
    ])
    def test_rejects(self, probs):
        with pytest.raises(GeneratorParameterError):
            ScaleFreeParams(*probs)

    def test_rejects_negative_delta(self):
        with pytest.raises(GeneratorParameterError):
            ScaleFreeParams(0.4, 0.55, 0.05, delta_in=-1.0)

    def test_describe(self):
        assert ScaleFreeParams(0.4, 0.55, 0.05, seed=7).describe() == "scalefree(alpha=0.4, beta=0.55, gamma=0.05, seed=7)"
        shifted = ScaleFreeParams(0.4, 0.55, 0.05, delta_in=0.2, seed=7)
        assert shifted.describe() == "scalefree(alpha=0.4, beta=0.55, gamma=0.05, delta_in=0.2, delta_out=0, seed=7)"

    def test_zero_probability_accepted(self):
        assert ScaleFreeParams(0.45, 0.55, 0.0).has_zero_probability
        assert not ScaleFreeParams(0.4, 0.55, 0.05).has_zero_probability


class TestScaleFree:
    params = ScaleFreeParams(0.4, 0.55, 0.05, seed=11)

    def test_deterministic(self):
        assert scale_free(64, self.params) == scale_free(64, self.params)

    def test_seed_changes_graph(self):
        other = ScaleFreeParams(0.4, 0.55, 0.05, seed=12)
        assert scale_free(64, self.params) != scale_free(64, other)

    def test_binary_and_loop_free(self):
        g = scale_free(128, self.params)
        assert g.n == 128
        assert set(g.adjacency.ravel().tolist()) <= {0, 1}
        assert not g.adjacency.diagonal().any()
        assert g.meta["dropped_self_loops"] >= 0
        assert g.meta["duplicate_edges"] >= 0

    def test_too_small(self):
        with pytest.raises(GeneratorParameterError):
            scale_free(2, self.params)

    def test_zero_gamma_grows_without_networkx(self):
        p = ScaleFreeParams(0.5, 0.5, 0.0, seed=1)
        g = scale_free(20, p)
        assert g == scale_free(20, p)
        assert g.n == 20
        assert g.meta["backend"] == "numpy"
        deg = degrees(g)
        # every later node enters through an alpha step, and nothing with in-degree 0 is ever targeted
        assert (deg.out_deg[3:] >= 1).all()
        assert not deg.in_deg[3:].any()

    def test_zero_alpha_grows_without_networkx(self):
        g = scale_free(30, ScaleFreeParams(0.0, 0.5, 0.5, seed=2))
        assert g.n == 30
        assert g.meta["backend"] == "numpy"
        assert (degrees(g).in_deg[3:] >= 1).all()

    def test_positive_probabilities_use_networkx(self):
        assert scale_free(20, self.params).meta["backend"] == "networkx"


class TestScaleFreeStatistics:
    """Degree structure of the attachment process with delta_in = delta_out = 0."""

    def test_seed_cycle_nodes_dominate_in_degree(self):
        hits = 0
        for seed in range(10):
            g = scale_free(128, ScaleFreeParams(0.4, 0.55, 0.05, seed=seed))
            hits += {1, 2} <= set(topk_nodes(degrees(g).in_deg, 3))
        assert hits >= 8

    def test_most_nodes_never_receive_an_edge(self):
        no_authority = [
            int((degrees(scale_free(128, ScaleFreeParams(0.4, 0.55, 0.05, seed=seed))).in_deg == 0).sum())
            for seed in range(10)
        ]
        assert np.median(no_authority) >= 90

    def test_large_gamma_gives_heavy_out_degree_tail(self):
        def max_out(probs):
            return np.median([
                degrees(scale_free(128, ScaleFreeParams(*probs, seed=seed))).out_deg.max()
                for seed in range(10)
            ])

        assert max_out((0.05, 0.55, 0.4)) > 2 * max_out((0.4, 0.55, 0.05))


class TestSpecs:
    def test_names(self):
        assert set(GENERATOR_NAMES) == {"path", "diamond", "star", "tailed", "example5", "scalefree"}

    def test_parse(self):
        assert parse_generator_spec("tailed:4,4") == ("tailed", (4, 4))
        assert parse_generator_spec(" Example5 ") == ("example5", ())
        assert parse_generator_spec("scalefree:128,0.4,0.55,0.05") == ("scalefree", (128, 0.4, 0.55, 0.05))
        assert parse_generator_spec("scalefree:128,0.4,0.55,0.05,0.2") == ("scalefree", (128, 0.4, 0.55, 0.05, 0.2))

    @pytest.mark.parametrize("spec", [
        "ring:4", "path", "path:4,5", "path:x", "tailed:4", "example5:1",
        "scalefree:1.5,0.4,0.55,0.05", "scalefree:128,0.4,0.55", "scalefree:128,0.4,0.55,0.05,0.2,0.0,1.0",
    ])
    def test_parse_errors(self, spec):
        with pytest.raises(GeneratorParameterError):
            parse_generator_spec(spec)

    def test_generate_matches_builders(self):
        assert generate_from_spec("diamond:5") == diamond_graph(5)
        assert generate_from_spec("example5") == example5_graph()

    def test_generate_scalefree_seed(self):
        a = generate_from_spec("scalefree:50,0.4,0.55,0.05", seed=5)
        b = scale_free(50, ScaleFreeParams(0.4, 0.55, 0.05, seed=5))
        assert a == b
        assert generate_from_spec("scalefree:50,0.4,0.55,0.05") == generate_from_spec("scalefree:50,0.4,0.55,0.05", seed=0)

    def test_generate_scalefree_deltas(self):
        a = generate_from_spec("scalefree:50,0.4,0.55,0.05,0.2,0.1", seed=5)
        assert a == scale_free(50, ScaleFreeParams(0.4, 0.55, 0.05, delta_in=0.2, delta_out=0.1, seed=5))
        assert a != generate_from_spec("scalefree:50,0.4,0.55,0.05", seed=5)

    def test_generate_invalid_size(self):
        with pytest.raises(GraphValidationError):
            generate_from_spec("path:1")
