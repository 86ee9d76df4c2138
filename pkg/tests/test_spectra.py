from fractions import Fraction

import numpy as np
import pytest
import sympy

from mlaplacian import graphs as G
from mlaplacian import spectra as S
from mlaplacian.laplacians import classic_matrix, m_laplacian
from mlaplacian.verify import LAPLACIAN_PAIR


def sympy_charpoly(mat):
    x = sympy.Symbol("x")
    m = sympy.Matrix([[sympy.Rational(str(v)) for v in row] for row in np.asarray(mat, dtype=object)])
    return [Fraction(str(c)) for c in m.charpoly(x).all_coeffs()]


def test_berkowitz_against_sympy():
    rng = np.random.default_rng(0)
    for n in range(1, 9):
        a = rng.integers(-5, 6, (n, n))
        assert [Fraction(c) for c in S.berkowitz(a.tolist())] == sympy_charpoly(a)


def test_char_poly_rational_matrix_against_sympy():
    rng = np.random.default_rng(1)
    for m in (2, 3):
        g = G.random_graph(7, 0.5, rng)
        lap = m_laplacian(g, m)
        assert list(S.char_poly_exact(lap).monic) == sympy_charpoly(lap)


def test_char_poly_small_cases():
    assert list(S.char_poly_exact([[1, -1], [-1, 1]]).monic) == [1, -2, 0]
    assert list(S.char_poly_exact(np.zeros((3, 3), dtype=int)).monic) == [1, 0, 0, 0]


def test_spectral_key_equality_uses_monic_form():
    a = S.SpectralKey(2, (1, -2, 0))      # det(xI - 2M) for M with eigenvalues 0, 1
    b = S.SpectralKey(1, (1, -1, 0))
    assert a == b and hash(a) == hash(b)
    assert a != S.SpectralKey(1, (1, -2, 0))
    assert S.SpectralKey.from_roots([0, Fraction(1, 2)]) == S.char_poly_exact([[Fraction(1, 4), Fraction(-1, 4)], [Fraction(-1, 4), Fraction(1, 4)]])


def test_union_key_factorizes():
    g, h = G.cycle(5), G.star_graph(4)
    u = G.disjoint_union(g, h)
    assert S.char_poly_exact(m_laplacian(u, 2)) == S.char_poly_exact(m_laplacian(g, 2)) * S.char_poly_exact(m_laplacian(h, 2))


def test_jacobi_against_numpy():
    rng = np.random.default_rng(2)
    for n in [1, 2, 5, 9, 15]:
        a = rng.normal(size=(n, n))
        a = a + a.T
        np.testing.assert_allclose(S.eig_symmetric(a), np.linalg.eigvalsh(a), atol=1e-10)


def test_jacobi_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        S.eig_symmetric([[0, 1], [2, 0]])


def test_jacobi_simple_cases():
    np.testing.assert_allclose(S.eig_symmetric(classic_matrix(G.complete(4), "laplacian")), [0, 4, 4, 4], atol=1e-12)
    np.testing.assert_allclose(S.eig_symmetric(np.diag([3.0, -1.0, 2.0])), [-1, 2, 3])


def test_cycle_closed_form():
    np.testing.assert_allclose(S.cycle_m_spectrum(4, 1), [0, 2, 2, 4], atol=1e-12)
    for n, m in [(7, 3), (6, 2), (11, 4)]:
        np.testing.assert_allclose(S.cycle_m_spectrum(n, m), S.eig_symmetric(m_laplacian(G.cycle(n), m)), atol=1e-9)
        lam = S.cycle_m_spectrum(n, m, by_index=True)
        np.testing.assert_allclose(lam[1:], lam[1:][::-1], atol=1e-12)
    with pytest.raises(G.CapabilityError):
        S.cycle_m_spectrum(4, 2)


def test_complete_closed_form():
    for n in range(3, 13):
        assert S.complete_m_eigenvalue(n, 1) == n
        assert S.complete_m_eigenvalue(n, 2) == Fraction(n * (18 - n), 12)
    assert not S.complete_m_spectrum(18, 2).any()
    key = S.char_poly_exact(m_laplacian(G.complete(7), 3))
    assert key == S.SpectralKey.from_roots([0] + [S.complete_m_eigenvalue(7, 3)] * 6)


def test_star_closed_form():
    assert S.star_m_eigenvalues(4, 2) == [0, Fraction(16, 3), Fraction(13, 12), Fraction(13, 12)]
    np.testing.assert_allclose(S.star_m_spectrum(4, 1), [0, 1, 1, 4], atol=1e-12)
    np.testing.assert_allclose(S.star_m_spectrum(10, 3), S.eig_symmetric(m_laplacian(G.star_graph(10), 3)), atol=1e-9)


def test_regular_map():
    # C_4: gamma = -2 maps to (4 + 32 + 32 - 4)/12 = 16/3, confirmed by the exact charpoly
    np.testing.assert_allclose(S.regular_two_spectrum([2, 0, 0, -2], 2), [0, 7 / 3, 7 / 3, 16 / 3])
    assert S.char_poly_exact(m_laplacian(G.cycle(4), 2)) == S.SpectralKey.from_roots(
        [0, Fraction(7, 3), Fraction(7, 3), Fraction(16, 3)])
    np.testing.assert_allclose(S.regular_two_spectrum([4, -1, -1, -1, -1], 4), [0] + [5 * 13 / 12] * 4)


@pytest.mark.parametrize("n,jumps", [(6, (1, 3)), (6, (1, 2)), (5, (1, 2)), (8, (1, 4)), (8, (2, 3))])
def test_circulant_closed_form(n, jumps):
    want = S.eig_symmetric(m_laplacian(G.circulant(n, jumps), 2))
    np.testing.assert_allclose(S.circulant_two_spectrum(n, jumps), want, atol=1e-9)


def test_circulant_k5_is_complete():
    np.testing.assert_allclose(S.circulant_two_spectrum(5, (1, 2)), S.complete_m_spectrum(5, 2), atol=1e-12)


def test_psd_complete_boundary():
    assert S.is_psd(m_laplacian(G.complete(18), 2))
    assert not S.is_psd(m_laplacian(G.complete(19), 2))


def test_psd_eight_regular():
    for n in (9, 10, 12):
        g = G.circulant(n, range(1, 5))
        assert set(g.degrees) == {8} and S.is_psd(m_laplacian(g, 2))


def test_psd_exact_agrees_with_float_on_corpus():
    for n in range(3, 7):
        for g in G.enumerate_nonisomorphic(n):
            lap = m_laplacian(g, 2)
            ev = S.eig_symmetric(lap)
            assert S.is_psd(lap, cross_check=False) == (ev[0] >= -1e-9)


def test_certified_rational_roots_on_printed_pair():
    lap = m_laplacian(LAPLACIAN_PAIR[0], 2)
    roots, rest = S.certified_rational_roots(S.char_poly_exact(lap), S.eig_symmetric(lap))
    assert sorted(roots) == [0, Fraction(13, 6), Fraction(43, 12)] and rest == 3


def test_unit_vector_pair_sum():
    # for unit x orthogonal to the ones vector, sum_{i<j} (x_i - x_j)^2 = n
    rng = np.random.default_rng(3)
    for _ in range(1000):
        n = int(rng.integers(2, 12))
        x = rng.normal(size=n)
        x -= x.mean()
        x /= np.linalg.norm(x)
        total = sum((x[i] - x[j]) ** 2 for i in range(n) for j in range(i + 1, n))
        assert abs(total - n) < 1e-9


def test_fiedler_examples():
    for g in (G.cycle(5), G.star_graph(4)):
        rep = S.fiedler_bound_check(g)
        assert rep.psd and rep.holds
    rep = S.fiedler_bound_check(G.cycle(5))
    assert abs(rep.mu2 - 4 * np.sin(np.pi / 5) ** 2) < 1e-12
    assert abs(rep.lambda2 - S.cycle_m_spectrum(5, 2)[1]) < 1e-12


def test_fiedler_non_psd_is_reported_not_raised():
    rep = S.fiedler_bound_check(G.complete(20))
    assert not rep.hypothesis_met
