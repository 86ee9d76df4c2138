"""Weighted circulant graphs with a prescribed Laplacian spectrum.

A weight matrix ``sum_k c_k A_k`` built from jump matrices is circulant, so the
Laplacian eigenvalues are linear in the jump weights ``c``:

    lambda_j = 4 * sum_k c_k sin^2(pi k j / n)

(for ``n = 2m`` the half jump ``k = m`` is a single matching and contributes
``2 c_m sin^2(pi j / 2)``).  Solving the ``m x m`` system for ``j = 1..m``
realizes any target of the doubled-eigenvalue shape.  Every construction is
verified by recomputing the spectrum.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .laplacians import WeightedGraph, weighted_laplacian
from .spectra import eig_symmetric

COND_LIMIT = 1e12
SPECTRUM_TOL = 1e-8
EMBED_TOL = 1e-7


class IllConditionedError(ArithmeticError):
    pass


class SpectrumMismatchError(AssertionError):
    pass


@dataclass(frozen=True)
class TargetSpectrum:
    """``pairs`` each appear twice; one 0 is implied; ``single`` (even shape only) once."""

    pairs: tuple[float, ...]
    single: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(float(x) for x in self.pairs)))
        if self.single is not None:
            object.__setattr__(self, "single", float(self.single))

    @property
    def even(self) -> bool:
        return self.single is not None

    @property
    def m(self) -> int:
        return len(self.pairs) + (1 if self.even else 0)

    @property
    def n(self) -> int:
        return 2 * self.m if self.even else 2 * self.m + 1

    def multiset(self) -> np.ndarray:
        vals = [0.0] + [x for p in self.pairs for x in (p, p)]
        if self.even:
            vals.append(self.single)
        return np.sort(np.array(vals))

    @classmethod
    def from_multiset(cls, values: Sequence[float], tol: float = 1e-9) -> TargetSpectrum:
        """Parse ``{l1, l1, ..., 0}`` (odd length) or ``{l1, l1, ..., 0, l}`` (even length)."""
        vals = sorted(float(v) for v in values)
        if not vals:
            raise ValueError("empty spectrum")
        zero = min(range(len(vals)), key=lambda i: abs(vals[i]))
        if abs(vals[zero]) > tol:
            raise ValueError("target spectrum must contain the eigenvalue 0")
        rest = vals[:zero] + vals[zero + 1:]
        even = len(vals) % 2 == 0
        pairs, single = [], None
        i = 0
        while i < len(rest):
            if i + 1 < len(rest) and abs(rest[i] - rest[i + 1]) <= tol * (1 + abs(rest[i])):
                pairs.append(rest[i])
                i += 2
            elif even and single is None:
                single = rest[i]
                i += 1
            else:
                raise ValueError(f"value {rest[i]} is not paired; not a realizable shape")
        return cls(tuple(pairs), single)


def sine_system_matrix(n: int, m: int) -> np.ndarray:
    """``Z[i, j] = sin^2(pi (i+1)(j+1) / n)`` for ``n = 2m + 1`` or ``n = 2m``."""
    if m < 1 or n not in (2 * m, 2 * m + 1):
        raise ValueError(f"need n = 2m or 2m+1, got n={n}, m={m}")
    k = np.arange(1, m + 1)
    return np.sin(np.pi * np.outer(k, k) / n) ** 2


def eigen_map(n: int, m: int) -> np.ndarray:
    """Matrix taking jump weights ``c`` to the eigenvalues ``lambda_1..lambda_m``."""
    z = 4 * sine_system_matrix(n, m)
    if n == 2 * m:
        z[:, -1] /= 2
    return z


def jump_weight_matrix(n: int, c: Sequence[float]) -> np.ndarray:
    w = np.zeros((n, n))
    i = np.arange(n)
    for k, ck in enumerate(c, start=1):
        w[i, (i + k) % n] = ck
        w[i, (i - k) % n] = ck
    return w


def _solve_refined(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    cond = np.linalg.cond(a, p=np.inf)
    if not cond < COND_LIMIT:
        raise IllConditionedError(f"system condition number {cond:.3e} exceeds {COND_LIMIT:.0e}")
    x = np.linalg.solve(a, b)
    x = x + np.linalg.solve(a, b - a @ x)
    return x


def _spectrum_error(got: np.ndarray, want: np.ndarray) -> float:
    return float(np.max(np.abs(np.sort(got) - np.sort(want)) / (1 + np.abs(np.sort(want))), initial=0.0))


@dataclass(frozen=True)
class Synthesis:
    graph: WeightedGraph
    jump_weights: np.ndarray
    spectrum: np.ndarray
    residual: float
    convention: int


def synthesize(target: TargetSpectrum, tol: float = SPECTRUM_TOL) -> Synthesis:
    """Jump weights and weighted graph realizing ``target``, verified to ``tol``.

    The system ``4 Z c = lambda`` is tried first, then its negation; the sign
    that reproduces the target is reported as ``convention``.
    """
    n, m = target.n, target.m
    rhs = np.array(list(target.pairs) + ([target.single] if target.even else []), dtype=float)
    a = eigen_map(n, m)
    want = target.multiset()
    best = None
    for sign in (1, -1):
        c = _solve_refined(sign * a, rhs)
        w = WeightedGraph(jump_weight_matrix(n, c))
        got = eig_symmetric(weighted_laplacian(w))
        err = _spectrum_error(got, want)
        if err <= tol:
            return Synthesis(w, c, got, err, sign)
        if best is None or err < best[0]:
            best = (err, got)
    raise SpectrumMismatchError(f"no sign convention reproduces {want}; best spectrum {best[1]} (error {best[0]:.2e})")


def build_weighted_from_spectrum(target: TargetSpectrum) -> WeightedGraph:
    return synthesize(target).graph


def contains_multiset(big: Sequence[float], small: Sequence[float], tol: float) -> bool:
    """Greedy matching of each value of ``small`` to a distinct nearby value of ``big``."""
    pool = list(big)
    for x in sorted(small):
        if not pool:
            return False
        i = min(range(len(pool)), key=lambda t: abs(pool[t] - x))
        if abs(pool[i] - x) > tol * (1 + abs(x)):
            return False
        pool.pop(i)
    return True


@dataclass(frozen=True)
class Embedding:
    """Outcome of deleting the last vertex of the odd-shape realization.

    ``matrix`` is the principal submatrix of the ``(2m+1)``-vertex Laplacian;
    ``graph`` is the weighted graph left after deleting the vertex, whose own
    Laplacian is ``graph_laplacian``.  ``interpretation`` names the matrix
    whose spectrum contains the target.
    """

    graph: WeightedGraph
    matrix: np.ndarray
    graph_laplacian: np.ndarray
    submatrix_spectrum: np.ndarray
    graph_spectrum: np.ndarray
    interpretation: str

    @property
    def spectrum(self) -> np.ndarray:
        return self.submatrix_spectrum if self.interpretation == "principal_submatrix" else self.graph_spectrum


def embed_spectrum(values: Sequence[float], tol: float = EMBED_TOL) -> Embedding:
    """A ``2m``-vertex matrix whose spectrum contains the ``m`` given values.

    The ``(2m+1)``-vertex realization of ``{l1, l1, ..., lm, lm, 0}`` has every
    ``l_i`` doubled, so by Cauchy interlacing each survives in any principal
    ``2m x 2m`` submatrix.  The Laplacian of the vertex-deleted weighted graph
    is also computed; it generally does not keep the values.
    """
    vals = [float(v) for v in values]
    if not vals:
        raise ValueError("need at least one value")
    syn = synthesize(TargetSpectrum(tuple(vals)))
    n = syn.graph.n
    lap = weighted_laplacian(syn.graph)
    sub = lap[: n - 1, : n - 1]
    deleted = syn.graph.delete_vertex(n - 1)
    dlap = weighted_laplacian(deleted)
    sub_spec = eig_symmetric(sub)
    del_spec = eig_symmetric(dlap)
    if contains_multiset(sub_spec, vals, tol):
        kind = "principal_submatrix"
    elif contains_multiset(del_spec, vals, tol):
        kind = "deleted_graph"
    else:
        raise SpectrumMismatchError(
            f"{sorted(vals)} not contained in submatrix spectrum {sub_spec} nor in deleted-graph spectrum {del_spec}"
        )
    return Embedding(deleted, sub, dlap, sub_spec, del_spec, kind)


def interlacing_positions(values: Sequence[float]) -> list[int]:
    """1-based positions of the sorted values in the embedded ``2m x 2m`` spectrum.

    With ``i`` values below 0 the ``j``-th value sits at ``2j - 1`` for
    ``j <= i`` and at ``2j`` afterwards.
    """
    vals = sorted(values)
    i = sum(1 for v in vals if v < 0)
    return [2 * j - 1 if j <= i else 2 * j for j in range(1, len(vals) + 1)]
