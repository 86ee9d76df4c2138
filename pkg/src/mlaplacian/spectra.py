"""Exact characteristic polynomials, a Jacobi eigensolver and closed-form spectra."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import fd_coeffs
from .graphs import CapabilityError, SimpleGraph, circulant_degree
from .graphs import _check_jumps
from .laplacians import classic_matrix, fraction_matrix, integer_scaled, m_laplacian
from .paths import complete_path_count

log = logging.getLogger(__name__)


def berkowitz(mat: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients ``[1, p_1, ..., p_n]`` of ``det(xI - M)``, division free.

    Each step borders the leading principal submatrix by one row and column and
    multiplies the running polynomial by a Toeplitz matrix built from
    ``R A^j C``.  Works over any ring; with ints the result is exact.
    """
    a = np.empty((len(mat), len(mat)), dtype=object)
    a[:] = [list(r) for r in mat]
    n = a.shape[0]
    poly = np.array([1], dtype=object)
    for k in range(n):
        r, v, sub = a[k, :k], a[:k, k], a[:k, :k]
        t = [1, -a[k, k]]
        for _ in range(k):
            t.append(-r.dot(v))
            v = sub.dot(v)
        # multiplying by the banded Toeplitz matrix of t is a truncated convolution
        poly = np.convolve(np.array(t, dtype=object), poly)[: k + 2]
    return [int(c) for c in poly]


@dataclass(frozen=True, eq=False)
class SpectralKey:
    """Characteristic polynomial of ``M`` stored as that of the integer matrix ``scale * M``.

    ``coeffs`` are ``[1, b_1, ..., b_n]`` for ``det(xI - scale*M)``.  Equality
    and hashing use the monic rational polynomial of ``M`` itself, whose
    coefficients are ``b_i / scale^i``, so keys built with different scales
    compare correctly.
    """

    scale: int
    coeffs: tuple[int, ...]
    monic: tuple[Fraction, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "monic", tuple(Fraction(b, self.scale ** i) for i, b in enumerate(self.coeffs))
        )

    def __eq__(self, other):
        return isinstance(other, SpectralKey) and self.monic == other.monic

    def __hash__(self):
        return hash(self.monic)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        """Evaluate the monic polynomial at ``x`` (Horner)."""
        acc = Fraction(0)
        for c in self.monic:
            acc = acc * x + c
        return acc

    def __mul__(self, other: SpectralKey) -> SpectralKey:
        prod = np.convolve(np.array(self.monic, dtype=object), np.array(other.monic, dtype=object))
        return SpectralKey.from_monic(prod.tolist())

    @classmethod
    def from_monic(cls, coeffs: Iterable) -> SpectralKey:
        c = [Fraction(x) for x in coeffs]
        if c[0] != 1:
            raise ValueError("leading coefficient must be 1")
        # smallest s with c_i * s^i integral for every i
        scale = 1
        for i, x in enumerate(c):
            while (x * scale ** i).denominator != 1:
                scale *= (x * scale ** i).denominator
        return cls(scale, tuple(int(x * scale ** i) for i, x in enumerate(c)))

    @classmethod
    def from_roots(cls, roots: Iterable) -> SpectralKey:
        poly = [Fraction(1)]
        for r in roots:
            r = Fraction(r)
            poly = [a - r * b for a, b in zip(poly + [Fraction(0)], [Fraction(0)] + poly)]
        return cls.from_monic(poly)

    def __str__(self):
        n = self.degree
        terms = []
        for i, c in enumerate(self.monic):
            if c == 0:
                continue
            p = n - i
            mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            mag = abs(c)
            coef = "" if (mag == 1 and p) else str(mag)
            sep = "*" if coef and mono else ""
            sign = "-" if c < 0 else "+"
            terms.append((sign, f"{coef}{sep}{mono}"))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {t}" for s, t in terms[1:])


def key_from_integer_matrix(mat, scale: int = 1) -> SpectralKey:
    return SpectralKey(int(scale), tuple(berkowitz(np.asarray(mat, dtype=object).tolist())))


def char_poly_exact(mat) -> SpectralKey:
    ints, scale = integer_scaled(mat)
    return key_from_integer_matrix(ints, scale)


def certified_rational_roots(key: SpectralKey, approx: Iterable[float], max_den: int = 10**6):
    """Rational roots of ``key`` (with multiplicity) found by snapping ``approx`` values.

    Every returned root is verified by exact polynomial division.  Returns
    ``(roots, remaining_degree)``.
    """
    poly = list(key.monic)
    roots = []
    for x in sorted(approx):
        cand = Fraction(x).limit_denominator(max_den)
        # synthetic division by (t - cand)
        q, acc = [], Fraction(0)
        for c in poly:
            acc = acc * cand + c
            q.append(acc)
        if len(poly) > 1 and q[-1] == 0:
            poly = q[:-1]
            roots.append(cand)
    return roots, len(poly) - 1


# ---------------------------------------------------------------------------
# numeric eigenvalues

def eig_symmetric(mat, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.

    Sweeps stop once the off-diagonal Frobenius norm is below ``tol * ||M||_F``.
    """
    a = np.array(np.asarray(mat).tolist(), dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, rtol=0, atol=1e-14 * max(1.0, np.abs(a).max(initial=0))):
        raise ValueError("matrix must be symmetric")
    n = a.shape[0]
    norm = np.linalg.norm(a)
    if norm == 0:
        return np.zeros(n)
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2))
        if off <= tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                with np.errstate(over="ignore"):
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if not abs(theta) < 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return np.sort(np.diag(a))


def second_smallest(mat) -> float:
    return float(eig_symmetric(mat)[1])


def fiedler_value(lap) -> float:
    return second_smallest(lap)


# ---------------------------------------------------------------------------
# closed forms

def cycle_m_spectrum(n: int, m: int, *, by_index: bool = False) -> np.ndarray:
    """``4 sum_k a_{k,m} sin^2(pi k j / n)`` for ``j = 0..n-1``.

    Sorted ascending unless ``by_index``.  Requires ``n >= 2m + 1``.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if n < 2 * m + 1:
        raise CapabilityError(f"cycle closed form is asserted only for n >= 2m+1, got n={n}, m={m}")
    j = np.arange(n)
    lam = sum(4 * float(a) * np.sin(np.pi * k * j / n) ** 2
              for k, a in enumerate(fd_coeffs.coeffs(m), start=1))
    return lam if by_index else np.sort(lam)


def complete_m_eigenvalue(n: int, m: int) -> Fraction:
    """The nonzero eigenvalue ``n * sum_k a_{k,m} (k-1)! C(n-2, k-1)`` of ``L^(m)(K_n)``."""
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    return n * sum((a * complete_path_count(n, k) for k, a in enumerate(fd_coeffs.coeffs(m), start=1)),
                   Fraction(0))


def complete_m_spectrum(n: int, m: int) -> np.ndarray:
    lam = float(complete_m_eigenvalue(n, m))
    return np.sort(np.array([0.0] + [lam] * (n - 1)))


def star_m_eigenvalues(n: int, m: int) -> list[Fraction]:
    """Exact multiset ``{0, n a_1} + (n-2) x {a_1 + (n-1) a_2}`` for the star on n vertices."""
    if n < 3 or not 1 <= m < n:
        raise ValueError(f"need n >= 3 and 1 <= m < n, got n={n}, m={m}")
    a = fd_coeffs.coeffs(m)
    a1 = a[0]
    a2 = a[1] if m >= 2 else Fraction(0)
    return [Fraction(0), n * a1] + [a1 + (n - 1) * a2] * (n - 2)


def star_m_spectrum(n: int, m: int) -> np.ndarray:
    return np.sort(np.array([float(x) for x in star_m_eigenvalues(n, m)]))


def regular_two_spectrum(adj_eigs, k: int) -> np.ndarray:
    """2-Laplacian spectrum of a k-regular graph from its adjacency spectrum."""
    g = np.asarray(adj_eigs, dtype=float)
    return np.sort((g * g - 16 * g + 16 * k - k * k) / 12)


def circulant_adjacency_eigenvalues(n: int, jumps) -> np.ndarray:
    """Adjacency eigenvalues of ``circulant(n, jumps)`` indexed by ``j = 0..n-1``."""
    s = _check_jumps(n, jumps)
    j = np.arange(n)
    half = 2 * s[-1] == n
    lam = sum(2 * np.cos(2 * np.pi * x * j / n) for x in (s[:-1] if half else s))
    if half:
        lam = lam + (-1.0) ** j
    return np.asarray(lam, dtype=float)


def circulant_two_spectrum(n: int, jumps, *, by_index: bool = False) -> np.ndarray:
    if n < 3:
        raise ValueError(f"circulant needs n >= 3, got {n}")
    lam = circulant_adjacency_eigenvalues(n, jumps)
    deg = circulant_degree(n, jumps)
    out = (lam * lam - 16 * lam - deg * deg + 16 * deg) / 12
    return out if by_index else np.sort(out)


# ---------------------------------------------------------------------------
# definiteness and the Fiedler sandwich

def is_psd(mat, *, cross_check: bool = True) -> bool:
    """Exact positive semi-definiteness test for a symmetric rational matrix.

    With ``det(xI - M) = sum_i (-1)^i c_i x^(n-i)``, ``c_i`` is the sum of the
    principal i x i minors, and a real-rooted polynomial has only nonnegative
    roots iff every ``c_i >= 0``.
    """
    key = char_poly_exact(mat)
    exact = all((-1) ** i * b >= 0 for i, b in enumerate(key.coeffs))
    if cross_check:
        ev = eig_symmetric(mat)
        bound = 1e-9 * max(1.0, float(np.abs(ev).max(initial=0)))
        floating = bool(ev[0] >= -bound)
        if floating != exact:
            log.warning("PSD disagreement: exact=%s, smallest eigenvalue %.3e", exact, ev[0])
    return exact


@dataclass(frozen=True)
class FiedlerReport:
    lambda2: float
    mu2: float
    lower: float
    upper: float
    psd: bool
    holds: bool

    @property
    def hypothesis_met(self) -> bool:
        return self.psd


def fiedler_bound_check(g: SimpleGraph, tol: float = 1e-9) -> FiedlerReport:
    """Compare the second-smallest eigenvalues of ``L2(g)`` and ``L(g)``.

    Checks ``4/3 mu2 - n(n-2)/6 <= lambda2 <= 4/3 mu2``.  The sandwich is only
    guaranteed when ``L2(g)`` is PSD; ``holds`` is reported regardless.
    """
    if g.n < 3:
        raise ValueError("the 2-Laplacian needs n >= 3")
    l2 = m_laplacian(g, 2)
    lam2 = second_smallest(l2)
    mu2 = fiedler_value(fraction_matrix(classic_matrix(g, "laplacian")))
    upper = 4 * mu2 / 3
    lower = upper - g.n * (g.n - 2) / 6
    holds = lower - tol <= lam2 <= upper + tol
    return FiedlerReport(lam2, mu2, lower, upper, is_psd(l2, cross_check=False), holds)
