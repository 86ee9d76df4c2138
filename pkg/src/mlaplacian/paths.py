"""Open-path counting matrices.

``open_path_matrix(g, k)[i, j]`` is the number of paths with ``k`` edges and
all vertices distinct that start at ``i`` and end at ``j != i``.  Matrices are
numpy object arrays of Python ints.
"""
from __future__ import annotations

from math import comb, factorial

import numpy as np

from .graphs import SimpleGraph


def _int_matrix(a) -> np.ndarray:
    return np.array(np.asarray(a).tolist(), dtype=object)


def open_path_matrix(g: SimpleGraph, k: int) -> np.ndarray:
    n = g.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"path length must satisfy 1 <= k <= n-1, got k={k}, n={n}")
    nbrs = g.neighbors
    counts = [[0] * n for _ in range(n)]
    for src in range(n):
        row = counts[src]
        # iterative DFS over simple paths; visited set as a bitmask
        stack = [(src, 1 << src, 0)]
        while stack:
            v, seen, depth = stack.pop()
            if depth == k:
                row[v] += 1
                continue
            for w in nbrs[v]:
                if not seen >> w & 1:
                    stack.append((w, seen | (1 << w), depth + 1))
    return np.array(counts, dtype=object)


def open_path_matrix_2(g: SimpleGraph) -> np.ndarray:
    """``A^2 - D``: length-2 walks between distinct vertices are always paths."""
    a = g.adjacency
    p = a @ a
    np.fill_diagonal(p, 0)
    return _int_matrix(p)


def open_path_matrix_3(g: SimpleGraph) -> np.ndarray:
    """Length-3 paths: ``A^3`` off the diagonal minus the ``A_ij (d_i + d_j - 1)`` backtracking walks."""
    a = g.adjacency
    d = a.sum(axis=1)
    p = a @ a @ a - a * (d[:, None] + d[None, :] - 1)
    np.fill_diagonal(p, 0)
    return _int_matrix(p)


def path_matrices(g: SimpleGraph, m: int) -> list[np.ndarray]:
    """``[P_1, ..., P_m]``, using the algebraic forms for ``k <= 3``; ``P_k = 0`` for ``k >= n``."""
    out = []
    for k in range(1, m + 1):
        if k >= g.n:
            out.append(np.zeros((g.n, g.n), dtype=int).astype(object))
        elif k == 1:
            out.append(_int_matrix(g.adjacency))
        elif k == 2:
            out.append(open_path_matrix_2(g))
        elif k == 3:
            out.append(open_path_matrix_3(g))
        else:
            out.append(open_path_matrix(g, k))
    return out


def circulant_jump_matrix(n: int, k: int) -> np.ndarray:
    """0/1 matrix with ``(i, j) = 1`` iff ``j = i +- k (mod n)``."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    a = np.zeros((n, n), dtype=int)
    i = np.arange(n)
    a[i, (i + k) % n] = 1
    a[i, (i - k) % n] = 1
    return _int_matrix(a)


def complete_path_count(n: int, k: int) -> int:
    """Number of length-k open paths between two fixed vertices of ``K_n``."""
    return factorial(k - 1) * comb(n - 2, k - 1)
