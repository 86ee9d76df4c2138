from math import comb, factorial

import networkx as nx
import numpy as np
import pytest

from mlaplacian import graphs as G
from mlaplacian import paths as P


def nx_path_counts(g, k):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    out = np.zeros((g.n, g.n), dtype=int)
    for i in range(g.n):
        for j in range(g.n):
            if i != j:
                out[i, j] = sum(1 for p in nx.all_simple_paths(h, i, j, cutoff=k) if len(p) == k + 1)
    return out


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_petersen_against_networkx(k):
    g = G.petersen()
    assert np.array_equal(P.open_path_matrix(g, k).astype(int), nx_path_counts(g, k))


def test_random_graphs_against_networkx():
    rng = np.random.default_rng(11)
    for _ in range(15):
        g = G.random_graph(int(rng.integers(3, 8)), 0.5, rng)
        for k in range(1, min(5, g.n)):
            assert np.array_equal(P.open_path_matrix(g, k).astype(int), nx_path_counts(g, k))


def test_closed_forms_k2_k3():
    rng = np.random.default_rng(12)
    for _ in range(200):
        g = G.random_graph(int(rng.integers(4, 11)), float(rng.uniform(0.1, 0.9)), rng)
        assert np.array_equal(P.open_path_matrix_2(g), P.open_path_matrix(g, 2))
        assert np.array_equal(P.open_path_matrix_3(g), P.open_path_matrix(g, 3))


@pytest.mark.parametrize("n", range(3, 10))
def test_complete_graph_counts(n):
    j = np.ones((n, n), dtype=int) - np.eye(n, dtype=int)
    for k in range(1, min(5, n)):
        want = factorial(k - 1) * comb(n - 2, k - 1)
        assert P.complete_path_count(n, k) == want
        assert np.array_equal(P.open_path_matrix(G.complete(n), k).astype(int), want * j)


def test_path_matrix_domain():
    with pytest.raises(ValueError):
        P.open_path_matrix(G.cycle(4), 4)
    with pytest.raises(ValueError):
        P.open_path_matrix(G.cycle(4), 0)


def test_path_matrices_pad_with_zeros():
    mats = P.path_matrices(G.complete(3), 4)
    assert len(mats) == 4 and not mats[2].any() and not mats[3].any()


@pytest.mark.parametrize("n,k", [(7, 1), (7, 3), (8, 4), (5, 2)])
def test_circulant_jump_matrix(n, k):
    a = P.circulant_jump_matrix(n, k).astype(int)
    assert np.array_equal(a, G.circulant(n, {k}).adjacency)
    assert np.array_equal(a, a.T) and set(a.sum(axis=1)) == {1 if 2 * k == n else 2}


def test_cycle_paths_are_jumps():
    # on a long cycle the length-k open paths are exactly the +-k neighbours
    n = 11
    for k in range(1, 5):
        assert np.array_equal(P.open_path_matrix(G.cycle(n), k), P.circulant_jump_matrix(n, k))
