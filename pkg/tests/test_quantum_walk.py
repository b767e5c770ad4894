import numpy as np
import pytest

from conftest import random_graph
from hubwalk.errors import InvalidStateError
from hubwalk.models.graph import bipartite_adjacency, from_edges
from hubwalk.services.quantum_walk import (
    InitialState,
    Recipe,
    WalkConfig,
    build_cqa_hamiltonian,
    build_cqg_hamiltonians,
    cqau_scores,
    cqaw_scores,
    cqg_scores,
    google_matrix,
    initial_degree_weighted,
    initial_uniform,
    limiting_occupation,
    rank_one_correction,
)
from hubwalk.services.spectral import sym_eig


class TestMatrices:
    def test_rank_one_alpha_one_is_identity_map(self, path4):
        np.testing.assert_array_equal(rank_one_correction(path4.adjacency, 1.0), path4.adjacency)

    def test_rank_one_alpha_zero(self):
        np.testing.assert_allclose(rank_one_correction(np.array([[0, 1], [0, 0]]), 0.0), np.full((2, 2), 0.5))

    def test_rank_one_path_entries(self, path4):
        m = rank_one_correction(path4.adjacency, 0.85)
        assert m[0, 1] == pytest.approx(0.8875)
        assert m[0, 0] == pytest.approx(0.0375)

    def test_rank_one_rejects_alpha(self):
        with pytest.raises(ValueError):
            rank_one_correction(np.zeros((2, 2)), 1.5)

    def test_google_dangling_row_uniform(self, path4):
        G = google_matrix(path4.adjacency, 0.85)
        np.testing.assert_allclose(G[3], np.full(4, 0.25))

    def test_google_alpha_zero(self, star4):
        np.testing.assert_allclose(google_matrix(star4.adjacency, 0.0), np.full((4, 4), 0.25))

    def test_google_two_cycle(self):
        G = google_matrix(np.array([[0, 1], [1, 0]]), 0.85)
        np.testing.assert_allclose(G, [[0.075, 0.925], [0.925, 0.075]])

    def test_google_rows_stochastic(self):
        rng = np.random.default_rng(21)
        for _ in range(10):
            g = random_graph(rng, 9, 0.2)
            np.testing.assert_allclose(google_matrix(g.adjacency, 0.85).sum(axis=1), 1.0, atol=1e-12)


class TestHamiltonians:
    def test_cqa_alpha_one_is_bipartite_adjacency(self, diamond5):
        H = build_cqa_hamiltonian(diamond5, WalkConfig(alpha=1.0))
        np.testing.assert_array_equal(H.matrix, bipartite_adjacency(diamond5).matrix)
        assert H.recipe is Recipe.CQA

    def test_cqa_block_positive(self, path4):
        H = build_cqa_hamiltonian(path4, WalkConfig(alpha=0.85))
        assert H.block.min() >= (1 - 0.85) / 4 - 1e-15

    def test_cqa_star_row(self, star4):
        H = build_cqa_hamiltonian(star4, WalkConfig(alpha=0.85))
        np.testing.assert_allclose(H.block[0], [0.0375, 0.8875, 0.8875, 0.8875])

    def test_cqg_symmetric_graph_gives_one_walk(self):
        g = from_edges(3, [(1, 2), (2, 1), (2, 3), (3, 2)])
        h_auth, h_hub = build_cqg_hamiltonians(g)
        np.testing.assert_allclose(h_hub.matrix, h_auth.matrix, atol=1e-15)

    def test_cqg_reversal_is_not_transpose(self, path4):
        h_auth, h_hub = build_cqg_hamiltonians(path4)
        assert not np.allclose(h_hub.block, h_auth.block.T)

    def test_cqg_star_patches(self, star4):
        h_auth, h_hub = build_cqg_hamiltonians(star4, WalkConfig(alpha=0.85))
        np.testing.assert_allclose(h_auth.block[1:], 0.25)
        np.testing.assert_allclose(h_hub.block[0], 0.25)
        assert h_auth.recipe is Recipe.CQG_AUTHORITY and h_hub.recipe is Recipe.CQG_HUB

    def test_cqg_symmetric_matrices(self, ex5):
        for H in build_cqg_hamiltonians(ex5):
            np.testing.assert_array_equal(H.matrix, H.matrix.T)
            assert H.dim == 8


class TestInitialStates:
    def test_uniform(self):
        np.testing.assert_allclose(initial_uniform(2).amplitudes, [0.5] * 4)
        assert initial_uniform(4).amplitudes[0] == pytest.approx(1 / np.sqrt(8))

    def test_degree_weighted_star(self, star4):
        amps = initial_degree_weighted(star4).amplitudes
        expected = np.sqrt(np.array([3, 0, 0, 0, 0, 1, 1, 1]) / 6)
        np.testing.assert_allclose(amps, expected)

    def test_degree_weighted_dangling_hub_is_zero(self, path4):
        assert initial_degree_weighted(path4).amplitudes[3] == 0.0

    def test_degree_weighted_empty_graph(self):
        with pytest.raises(InvalidStateError):
            initial_degree_weighted(from_edges(3, []))

    def test_non_unit_rejected(self):
        with pytest.raises(InvalidStateError):
            InitialState(amplitudes=np.array([1.0, 1.0]), kind="test")


class TestLimitingOccupation:
    def test_distinct_spectrum_reduces_to_diagonal_formula(self):
        rng = np.random.default_rng(31)
        m = rng.standard_normal((6, 6))
        H = m + m.T
        psi = rng.standard_normal(6)
        psi /= np.linalg.norm(psi)
        eig = sym_eig(H)
        a = eig.eigenvectors.T @ psi
        expected = (eig.eigenvectors ** 2) @ (a ** 2)
        np.testing.assert_allclose(limiting_occupation(H, psi), expected, atol=1e-12)

    def test_eigenvector_start(self):
        rng = np.random.default_rng(32)
        m = rng.standard_normal((5, 5))
        H = m + m.T
        phi = sym_eig(H).eigenvectors[:, 1]
        np.testing.assert_allclose(limiting_occupation(H, phi), phi ** 2, atol=1e-12)

    def test_path_cqa(self, path4):
        occ = limiting_occupation(build_cqa_hamiltonian(path4), initial_uniform(4))
        np.testing.assert_allclose(occ[:4], [0.13413, 0.13413, 0.13413, 0.09760], atol=5e-5)

    def test_state_length_mismatch(self, path4):
        with pytest.raises(InvalidStateError):
            limiting_occupation(build_cqa_hamiltonian(path4), initial_uniform(3))

    def test_degenerate_groups_keep_interference(self, star4):
        # zero-energy subspace of the star is 6-dimensional
        H = build_cqa_hamiltonian(star4, WalkConfig(alpha=1.0))
        occ = limiting_occupation(H, initial_uniform(4))
        assert occ.sum() == pytest.approx(1.0, abs=1e-12)
        assert np.all(occ >= 0)


class TestScores:
    def test_cqau_diamond(self, diamond5):
        r = cqau_scores(diamond5)
        np.testing.assert_allclose(r.hub, [0.20273, 0.07000, 0.07000, 0.07000, 0.08728], atol=5e-5)

    def test_cqaw_star(self, star4):
        np.testing.assert_allclose(cqaw_scores(star4).hub, [0.49571, 0.00143, 0.00143, 0.00143], atol=5e-5)

    def test_cqg_star_authority(self, star4):
        np.testing.assert_allclose(cqg_scores(star4).authority, [0.07733, 0.14089, 0.14089, 0.14089], atol=5e-5)

    def test_cqa_total_occupation(self, ex5):
        for result in (cqau_scores(ex5), cqaw_scores(ex5)):
            assert result.hub.sum() + result.authority.sum() == pytest.approx(1.0, abs=1e-9)

    def test_result_metadata(self, path4):
        r = cqg_scores(path4, WalkConfig(alpha=0.5))
        assert r.method == "cqg"
        assert r.info["alpha"] == 0.5
        assert r.n == 4
