from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from mlaplacian import fd_coeffs
from mlaplacian import graphs as G
from mlaplacian.census import spectral_invariant
from mlaplacian.laplacians import m_laplacian
from mlaplacian.spectra import char_poly_exact
from mlaplacian.synthesis import TargetSpectrum, synthesize


@st.composite
def simple_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return G.SimpleGraph(n, tuple(p for p, b in zip(pairs, mask) if b))


@given(simple_graphs(max_n=40))
def test_graph6_roundtrip(g):
    assert G.parse_graph6(G.write_graph6(g)) == g


@given(simple_graphs(), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_canonical_code_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert G.canonical_code(g) == G.canonical_code(g.relabel(perm))


@given(simple_graphs(min_n=2, max_n=8), st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_m_laplacian_structure(g, m):
    m = min(m, g.n - 1)
    lap = m_laplacian(g, m)
    assert np.array_equal(lap, lap.T)
    assert all(s == 0 for s in lap.sum(axis=1))


@given(simple_graphs(max_n=7), st.randoms(use_true_random=False), st.sampled_from(["A", "L", "|L|", "L2"]))
@settings(max_examples=40, deadline=None)
def test_spectral_key_is_isomorphism_invariant(g, rnd, kind):
    if kind == "L2" and g.n < 3:
        return
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert spectral_invariant(g, kind) == spectral_invariant(g.relabel(perm), kind)


@given(simple_graphs(min_n=3, max_n=5), simple_graphs(min_n=3, max_n=5))
@settings(max_examples=30, deadline=None)
def test_union_charpoly_factorizes(g, h):
    whole = char_poly_exact(m_laplacian(G.disjoint_union(g, h), 2))
    assert whole == char_poly_exact(m_laplacian(g, 2)) * char_poly_exact(m_laplacian(h, 2))


@given(st.integers(1, 12))
def test_moments(m):
    a = fd_coeffs.coeffs(m)
    assert sum(k * k * x for k, x in enumerate(a, start=1)) == 1
    for j in range(2, m + 1):
        assert sum(k ** (2 * j) * x for k, x in enumerate(a, start=1)) == 0
    assert sum(a) == sum(fd_coeffs.coeff(k, m) for k in range(1, m + 1))
    assert all(isinstance(x, Fraction) for x in a)


@given(st.lists(st.floats(-10, 10), min_size=1, max_size=6))
@settings(max_examples=50, deadline=None)
def test_synthesis_roundtrip(vals):
    t = TargetSpectrum(tuple(vals))
    syn = synthesize(t)
    assert np.all(np.abs(syn.spectrum - t.multiset()) <= 1e-8 * (1 + np.abs(t.multiset())))
