"""Central finite-difference coefficients for the periodic second derivative.

``coeff(k, m)`` is the weight of ``u[i+k] - 2 u[i] + u[i-k]`` in the stencil of
accuracy order ``2m``.  Coefficients are exact :class:`fractions.Fraction`
values; only :func:`apply_discrete_laplacian` works in floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, lcm

import numpy as np


def coeff(k: int, m: int) -> Fraction:
    if m < 1 or not 1 <= k <= m:
        raise ValueError(f"need 1 <= k <= m, got k={k}, m={m}")
    return Fraction((-1) ** (k + 1) * 2 * comb(2 * m, m - k), k * k * comb(2 * m, m))


@lru_cache(maxsize=None)
def coeffs(m: int) -> tuple[Fraction, ...]:
    """``(coeff(1, m), ..., coeff(m, m))``."""
    return tuple(coeff(k, m) for k in range(1, m + 1))


def coeff_denominator_lcm(m: int) -> int:
    return lcm(*(a.denominator for a in coeffs(m)))


def bareiss_solve(a: list[list[int]], b: list[int]) -> list[Fraction]:
    """Solve ``a x = b`` exactly for an integer nonsingular system.

    Fraction-free Bareiss elimination keeps every intermediate an integer; the
    final back substitution divides once per unknown.
    """
    n = len(a)
    m = [list(map(int, row)) + [int(rhs)] for row, rhs in zip(a, b)]
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                raise ArithmeticError("singular system")
            m[k], m[swap] = m[swap], m[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    if m[n - 1][n - 1] == 0:
        raise ArithmeticError("singular system")
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        s = Fraction(m[i][n]) - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return x


def coeff_system(m: int) -> tuple[list[list[int]], list[int]]:
    """Moment system: row ``j`` is ``(1, 2^(2j), ..., m^(2j))``, right side ``(1, 0, ..., 0)``."""
    a = [[k ** (2 * j) for k in range(1, m + 1)] for j in range(1, m + 1)]
    b = [1] + [0] * (m - 1)
    return a, b


def solve_coeff_system(m: int) -> list[Fraction]:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return bareiss_solve(*coeff_system(m))


def _as_dtype(x: Fraction, dtype) -> np.generic:
    dt = np.dtype(dtype)
    if dt == object:
        return x
    return dt.type(x.numerator) / dt.type(x.denominator)


def apply_discrete_laplacian(u, h: float, m: int) -> np.ndarray:
    """Periodic ``(1/h^2) sum_k a_{k,m} (u[i+k] - 2u[i] + u[i-k])``.

    Works in the dtype of ``u``; pass ``np.longdouble`` samples when the
    truncation error of high orders falls below double-precision rounding.
    """
    u = np.asarray(u)
    if not np.issubdtype(u.dtype, np.floating) and u.dtype != object:
        u = u.astype(np.float64)
    n = u.shape[0]
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m >= n:
        raise ValueError(f"need m < n, got m={m}, n={n}")
    out = np.zeros_like(u)
    for k, a in enumerate(coeffs(m), start=1):
        out = out + _as_dtype(a, u.dtype) * (np.roll(u, -k) - 2 * u + np.roll(u, k))
    return out / (h * h)


# test functions on [0, 2 pi) with their exact second derivatives
TEST_FUNCTIONS = {
    "sin": (np.sin, lambda x: -np.sin(x)),
    "cos": (np.cos, lambda x: -np.cos(x)),
    "expsin": (lambda x: np.exp(np.sin(x)), lambda x: (np.cos(x) ** 2 - np.sin(x)) * np.exp(np.sin(x))),
}


def convergence_study(m: int, grids=(16, 32, 64, 128, 256), dtype=np.longdouble, func: str = "sin"):
    """Max error of the stencil on a periodic test function and the fitted log-log slope.

    Returns ``(hs, errors, slope)``.  Grid points are ``x_i = (i - 1/2) h``.
    """
    if func not in TEST_FUNCTIONS:
        raise ValueError(f"func must be one of {sorted(TEST_FUNCTIONS)}, got {func!r}")
    f, d2f = TEST_FUNCTIONS[func]
    dt = np.dtype(dtype).type
    two_pi = 8 * np.arctan(dt(1))
    hs, errs = [], []
    for n in grids:
        h = two_pi / dt(n)
        x = (np.arange(1, n + 1, dtype=dtype) - dt(0.5)) * h
        u = f(x)
        err = np.max(np.abs(apply_discrete_laplacian(u, h, m) - d2f(x)))
        hs.append(float(h))
        errs.append(float(err))
    slope = np.polyfit(np.log(hs), np.log(errs), 1)[0]
    return np.array(hs), np.array(errs), float(slope)


@lru_cache(maxsize=None)
def _d_table(size: int) -> list[list[int]]:
    # d[j][k], 1-based; d[j][1] = 2j - 1, d[1][k] = 1, d[j+1][k+1] = d[j][k+1] + d[j+1][k]
    d = [[0] * (size + 2) for _ in range(size + 2)]
    for j in range(1, size + 2):
        d[j][1] = 2 * j - 1
    for k in range(1, size + 2):
        d[1][k] = 1
    for j in range(1, size + 1):
        for k in range(1, size + 1):
            d[j + 1][k + 1] = d[j][k + 1] + d[j + 1][k]
    return d


def cycle_poly_coeffs(m: int) -> list[Fraction]:
    """``[c_0, ..., c_m]`` with ``L^(m)(C_n) = sum_k c_k A^k`` (valid for ``n > 2m``)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    a = dict(enumerate(coeffs(m), start=1))
    d = _d_table(m + 1)
    c0 = 2 * sum((a[2 * j - 1] for j in range(1, (m + 1) // 2 + 1)), Fraction(0))
    c0 += 4 * sum((a[4 * j - 2] for j in range(1, (m + 2) // 4 + 1)), Fraction(0))
    out = [c0]
    for k in range(1, m + 1):
        out.append(sum(((-1) ** j * d[j][k] * a[2 * j + k - 2]
                        for j in range(1, (m - k + 2) // 2 + 1)), Fraction(0)))
    return out
