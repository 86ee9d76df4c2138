import numpy as np
import pytest

from mlaplacian import synthesis as Y
from mlaplacian.laplacians import weighted_laplacian
from mlaplacian.spectra import eig_symmetric


def test_sine_system_small():
    np.testing.assert_allclose(Y.sine_system_matrix(3, 1), [[0.75]])
    s1, s2 = np.sin(np.pi / 5) ** 2, np.sin(2 * np.pi / 5) ** 2
    np.testing.assert_allclose(Y.sine_system_matrix(5, 2), [[s1, s2], [s2, np.sin(4 * np.pi / 5) ** 2]])
    assert abs(np.linalg.det(Y.sine_system_matrix(7, 3))) > 1e-9
    with pytest.raises(ValueError):
        Y.sine_system_matrix(9, 2)


def test_k3_from_spectrum():
    syn = Y.synthesize(Y.TargetSpectrum((3.0,)))
    np.testing.assert_allclose(syn.jump_weights, [1.0])
    np.testing.assert_allclose(syn.graph.weights, np.ones((3, 3)) - np.eye(3))


def test_zero_target():
    w = Y.build_weighted_from_spectrum(Y.TargetSpectrum.from_multiset([0, 0, 0]))
    assert not np.any(w.weights)


def test_two_pair_target():
    t = Y.TargetSpectrum.from_multiset([0, 1, 1, 2, 2])
    assert (t.n, t.m, t.even) == (5, 2, False)
    syn = Y.synthesize(t)
    np.testing.assert_allclose(syn.spectrum, [0, 1, 1, 2, 2], atol=1e-8)


def test_from_multiset_shapes():
    t = Y.TargetSpectrum.from_multiset([2, 0, 1, 1])
    assert t.even and t.pairs == (1.0,) and t.single == 2.0
    with pytest.raises(ValueError):
        Y.TargetSpectrum.from_multiset([1, 1, 2])
    with pytest.raises(ValueError):
        Y.TargetSpectrum.from_multiset([0, 1, 2])


def test_random_odd_targets():
    rng = np.random.default_rng(0)
    for _ in range(100):
        m = int(rng.integers(1, 7))
        t = Y.TargetSpectrum(tuple(rng.uniform(-10, 10, m)))
        syn = Y.synthesize(t)
        got = eig_symmetric(weighted_laplacian(syn.graph))
        assert np.all(np.abs(got - t.multiset()) <= 1e-8 * (1 + np.abs(t.multiset())))


def test_random_even_targets():
    rng = np.random.default_rng(1)
    for _ in range(20):
        m = int(rng.integers(1, 7))
        t = Y.TargetSpectrum(tuple(rng.uniform(-10, 10, m - 1)), float(rng.uniform(-10, 10)))
        assert t.n == 2 * m
        syn = Y.synthesize(t)
        np.testing.assert_allclose(syn.spectrum, t.multiset(), atol=1e-8 * (1 + np.abs(t.multiset()).max()))


def test_even_case_uses_half_jump_matching():
    syn = Y.synthesize(Y.TargetSpectrum((), 2.0))
    # n = 2, one edge of weight 1 has Laplacian spectrum {0, 2}
    np.testing.assert_allclose(syn.graph.weights, [[0, 1], [1, 0]])


def test_spectrum_symmetry_of_circulant():
    rng = np.random.default_rng(2)
    t = Y.TargetSpectrum(tuple(rng.uniform(-5, 5, 4)))
    syn = Y.synthesize(t)
    n = syn.graph.n
    j = np.arange(n)
    lam = sum(4 * c * np.sin(np.pi * k * j / n) ** 2 for k, c in enumerate(syn.jump_weights, start=1))
    np.testing.assert_allclose(lam[1:], lam[1:][::-1], atol=1e-12)


def test_ill_conditioned_is_reported(monkeypatch):
    monkeypatch.setattr(Y, "COND_LIMIT", 1.0)
    with pytest.raises(Y.IllConditionedError):
        Y.synthesize(Y.TargetSpectrum((1.0, 2.0)))


@pytest.mark.parametrize("vals", [[0.0], [1.0, 3.0], [-1.0, 2.0], [5.0, 5.0, -3.0]])
def test_embedding_contains_values(vals):
    emb = Y.embed_spectrum(vals)
    assert emb.matrix.shape == (2 * len(vals), 2 * len(vals))
    assert emb.interpretation == "principal_submatrix"
    assert Y.contains_multiset(emb.spectrum, vals, 1e-7)


def test_deleted_graph_laplacian_is_the_submatrix_minus_removed_weights():
    emb = Y.embed_spectrum([1.0, 3.0])
    w = emb.graph.weights
    np.testing.assert_allclose(emb.graph_laplacian, weighted_laplacian(emb.graph))
    # the principal submatrix keeps the weight to the deleted vertex on its diagonal
    extra = np.diag(emb.matrix - emb.graph_laplacian)
    assert np.all(np.abs(emb.matrix - emb.graph_laplacian - np.diag(extra)) < 1e-12)
    assert w.shape == (4, 4)


def test_interlacing_pattern():
    rng = np.random.default_rng(3)
    for _ in range(20):
        m = int(rng.integers(1, 6))
        vals = sorted(rng.uniform(-10, 10, m))
        emb = Y.embed_spectrum(vals)
        spec = np.sort(emb.submatrix_spectrum)
        for v, pos in zip(vals, Y.interlacing_positions(vals)):
            assert abs(spec[pos - 1] - v) < 1e-7 * (1 + abs(v))


def test_contains_multiset():
    assert Y.contains_multiset([0, 1, 1, 2], [1, 1], 1e-9)
    assert not Y.contains_multiset([0, 1, 2], [1, 1], 1e-9)
