from fractions import Fraction

import numpy as np
import pytest
import sympy

from mlaplacian import fd_coeffs as F
from mlaplacian.graphs import cycle
from mlaplacian.laplacians import fraction_matrix, m_laplacian


def sympy_weights(m):
    # negated central weights for -u'' on offsets 0, -1, 1, ..., -m, m
    pts = [0]
    for k in range(1, m + 1):
        pts += [-k, k]
    w = sympy.finite_diff_weights(2, pts, 0)[2][-1]
    return [-Fraction(str(w[2 * k])) for k in range(1, m + 1)]


@pytest.mark.parametrize("m", range(1, 9))
def test_coeffs_match_sympy_stencil(m):
    # sympy returns weights of u(x+kh); our a_k multiplies u[i+k] - 2u[i] + u[i-k]
    assert list(F.coeffs(m)) == [-x for x in sympy_weights(m)]


def test_table_values():
    assert F.coeffs(2) == (Fraction(4, 3), Fraction(-1, 12))
    assert F.coeffs(3) == (Fraction(3, 2), Fraction(-3, 20), Fraction(1, 90))
    assert F.coeffs(4) == (Fraction(8, 5), Fraction(-1, 5), Fraction(8, 315), Fraction(-1, 560))


@pytest.mark.parametrize("m", range(1, 11))
def test_moment_solve_agrees(m):
    assert tuple(F.solve_coeff_system(m)) == F.coeffs(m)


def test_bareiss_against_fraction_gauss():
    a = [[2, 1, 1], [4, 1, 0], [-2, 2, 1]]
    b = [1, -2, 7]
    x = F.bareiss_solve(a, b)
    assert all(sum(Fraction(a[i][j]) * x[j] for j in range(3)) == b[i] for i in range(3))


def test_bareiss_needs_pivoting():
    x = F.bareiss_solve([[0, 1], [1, 0]], [3, 5])
    assert x == [5, 3]


def test_coeff_domain_errors():
    with pytest.raises(ValueError):
        F.coeff(0, 2)
    with pytest.raises(ValueError):
        F.coeff(3, 2)


def test_discrete_laplacian_exact_on_low_modes():
    # on exp(i w x) the stencil gives -(4/h^2) sum a_k sin^2(k w h / 2)
    n, m = 32, 3
    h = 2 * np.pi / n
    x = (np.arange(1, n + 1) - 0.5) * h
    u = np.cos(3 * x)
    sym = 4 / h ** 2 * sum(float(a) * np.sin(k * 3 * h / 2) ** 2 for k, a in enumerate(F.coeffs(m), start=1))
    np.testing.assert_allclose(F.apply_discrete_laplacian(u, h, m), -sym * u, atol=1e-12)


def test_discrete_laplacian_keeps_dtype():
    u = np.sin(np.linspace(0, 1, 16, dtype=np.longdouble))
    assert F.apply_discrete_laplacian(u, 0.1, 2).dtype == np.longdouble
    with pytest.raises(ValueError):
        F.apply_discrete_laplacian(np.zeros(3), 1.0, 3)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_convergence_order_extended_precision(m):
    _, errs, slope = F.convergence_study(m)
    assert abs(slope - 2 * m) <= 0.2
    assert np.all(np.diff(errs) < 0)


def test_double_precision_m3_is_rounding_limited():
    # documents why the order study samples in extended precision
    _, _, slope = F.convergence_study(3, dtype=np.float64)
    assert slope < 5.8


@pytest.mark.parametrize("m,want", [
    (1, ["2", "-1"]),
    (2, ["7/3", "-4/3", "1/12"]),
    (4, ["772/315", "-32/21", "27/140", "-8/315", "1/560"]),
])
def test_cycle_poly_coeffs_values(m, want):
    assert F.cycle_poly_coeffs(m) == [Fraction(x) for x in want]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_cycle_poly_is_the_cycle_m_laplacian(m):
    n = 2 * m + 3
    a = fraction_matrix(cycle(n).adjacency)
    power = fraction_matrix(np.eye(n, dtype=int))
    total = fraction_matrix(np.zeros((n, n), dtype=int))
    for c in F.cycle_poly_coeffs(m):
        total = total + c * power
        power = power.dot(a)
    assert np.array_equal(total, m_laplacian(cycle(n), m))
