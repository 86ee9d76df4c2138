"""m-Laplacians and the classic graph matrices.

Exact matrices are numpy object arrays holding :class:`fractions.Fraction`
(rational) or ``int`` entries.  Float weight matrices are accepted wherever a
:class:`WeightedGraph` is, which the synthesis module relies on.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from . import fd_coeffs
from .graphs import SimpleGraph, complete, tensor_product
from .paths import path_matrices

MAX_M = 5


def fraction_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = x if isinstance(x, Fraction) else Fraction(x)
    return out


def _zeros(n: int) -> np.ndarray:
    return fraction_matrix(np.zeros((n, n), dtype=int))


def _identity(n: int) -> np.ndarray:
    return fraction_matrix(np.eye(n, dtype=int))


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Symmetric edge-weight matrix with zero diagonal; weights may be negative."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("weight matrix must be square")
        if not np.all(w == w.T):
            raise ValueError("weight matrix must be symmetric")
        if np.any(np.diag(w) != 0):
            raise ValueError("weight matrix must have a zero diagonal")
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    def __eq__(self, other):
        return isinstance(other, WeightedGraph) and np.array_equal(self.weights, other.weights)

    def delete_vertex(self, v: int) -> WeightedGraph:
        keep = [i for i in range(self.n) if i != v]
        return WeightedGraph(self.weights[np.ix_(keep, keep)])


def _check_m(g: SimpleGraph, m: int, extend: bool):
    if not 1 <= m <= MAX_M:
        raise ValueError(f"m must be in 1..{MAX_M}, got {m}")
    if m >= g.n and not extend:
        raise ValueError(f"the m-Laplacian needs m < n, got m={m}, n={g.n}")


def m_adjacency(g: SimpleGraph, m: int, *, extend: bool = False) -> WeightedGraph:
    """Weights ``sum_k coeff(k, m) * P_k``.

    With ``extend=True`` the restriction ``m < n`` is lifted; path lengths
    ``k >= n`` then contribute nothing since no such paths exist.
    """
    _check_m(g, m, extend)
    w = _zeros(g.n)
    for a, p in zip(fd_coeffs.coeffs(m), path_matrices(g, m)):
        w = w + a * p
    return WeightedGraph(w)


def weighted_laplacian(w: WeightedGraph) -> np.ndarray:
    a = w.weights
    lap = -a.copy()
    for i, s in enumerate(a.sum(axis=1)):
        lap[i, i] = s
    return lap


def m_laplacian(g: SimpleGraph, m: int, *, extend: bool = False) -> np.ndarray:
    return weighted_laplacian(m_adjacency(g, m, extend=extend))


def two_laplacian_direct(g: SimpleGraph, *, extend: bool = False) -> np.ndarray:
    """``D' - A'`` with ``A' = (16A - A^2 + D)/12`` and ``D'`` its row sums."""
    _check_m(g, 2, extend)
    a = g.adjacency
    aprime = fraction_matrix(16 * a - a @ a + np.diag(a.sum(axis=1))) / 12
    return weighted_laplacian(WeightedGraph(aprime))


CLASSIC_KINDS = ("adjacency", "laplacian", "signless_laplacian")


def classic_matrix(g: SimpleGraph, kind: str) -> np.ndarray:
    a = g.adjacency
    d = np.diag(a.sum(axis=1))
    if kind == "adjacency":
        out = a
    elif kind == "laplacian":
        out = d - a
    elif kind == "signless_laplacian":
        out = d + a
    else:
        raise ValueError(f"kind must be one of {CLASSIC_KINDS}, got {kind!r}")
    return np.array(out.tolist(), dtype=object)


def integer_scaled(mat, m: int | None = None) -> tuple[np.ndarray, int]:
    """``(scale * mat, scale)`` with ``scale`` the lcm of the entry denominators.

    ``m`` is accepted for symmetry with the builders; the scale always divides
    the lcm of the stencil denominators for that ``m``.
    """
    mat = fraction_matrix(mat)
    scale = lcm(1, *(x.denominator for x in mat.flat))
    ints = np.empty(mat.shape, dtype=object)
    for idx, x in np.ndenumerate(mat):
        ints[idx] = x.numerator * (scale // x.denominator)
    return ints, scale


def block_diag(*mats) -> np.ndarray:
    n = sum(x.shape[0] for x in mats)
    out = _zeros(n)
    at = 0
    for x in mats:
        k = x.shape[0]
        out[at:at + k, at:at + k] = x
        at += k
    return out


def two_laplacian_cartesian_identity(g: SimpleGraph, h: SimpleGraph) -> np.ndarray:
    """``L2(G) (x) I + I (x) L2(H) - L(G x H)/6``; equals ``L2`` of the Cartesian product."""
    l2g = m_laplacian(g, 2)
    l2h = m_laplacian(h, 2)
    lt = fraction_matrix(classic_matrix(tensor_product(g, h), "laplacian"))
    return np.kron(l2g, _identity(h.n)) + np.kron(_identity(g.n), l2h) - lt / 6


def degree_sum_matrix(g: SimpleGraph) -> np.ndarray:
    """``M`` with ``M_ij = d_i + d_j`` (diagonal included)."""
    d = g.degrees
    return fraction_matrix(d[:, None] + d[None, :])


def two_laplacian_complement_identity(g: SimpleGraph) -> np.ndarray:
    """``L2(G) - 17/6 L(G) + (18-n)/12 L(K_n) + L_M/12``; equals ``L2`` of the complement.

    ``L_M`` is the Laplacian of the complete graph weighted by ``d_i + d_j``,
    i.e. ``diag(n d_i + 2|E|) - M``.  Adding ``M/12`` itself in place of
    ``L_M/12`` does not give the complement's 2-Laplacian.
    """
    n = g.n
    lg = fraction_matrix(classic_matrix(g, "laplacian"))
    lk = fraction_matrix(classic_matrix(complete(n), "laplacian"))
    big_m = degree_sum_matrix(g)
    lm = fraction_matrix(np.diag(n * g.degrees + 2 * g.num_edges)) - big_m
    return m_laplacian(g, 2) - Fraction(17, 6) * lg + Fraction(18 - n, 12) * lk + lm / 12
