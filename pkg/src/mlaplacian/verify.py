"""Self-checks of the closed forms and identities, as used by ``mlap verify``.

Every check returns a :class:`Check`; none raises on a mathematical failure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

import numpy as np

from . import fd_coeffs, spectra
from .graphs import (
    SimpleGraph, cartesian_product, circulant, complement, complete, cycle, disjoint_union,
    enumerate_nonisomorphic, random_graph, star_graph,
)
from .laplacians import (
    classic_matrix, fraction_matrix, integer_scaled, m_laplacian, two_laplacian_cartesian_identity,
    two_laplacian_complement_identity,
)

# Laplacian-cospectral pair on 6 vertices whose 2-Laplacians differ.
LAPLACIAN_PAIR = (
    SimpleGraph(6, ((0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (3, 4), (4, 5))),
    SimpleGraph(6, ((0, 1), (0, 3), (0, 5), (1, 2), (1, 4), (3, 4), (4, 5))),
)
LAPLACIAN_PAIR_SCALED = (
    [[60, -15, -15, -16, 2, -16], [-15, 28, -15, 1, 0, 1], [-15, -15, 28, 1, 0, 1],
     [-16, 1, 1, 28, -16, 2], [2, 0, 0, -16, 30, -16], [-16, 1, 1, 2, -16, 28]],
    [[44, -16, 1, -16, 3, -16], [-16, 44, -16, 2, -16, 2], [1, -16, 14, 0, 1, 0],
     [-16, 2, 0, 28, -16, 2], [3, -16, 1, -16, 44, -16], [-16, 2, 0, 2, -16, 28]],
)
# Published (rounded) spectra of the pair above.
LAPLACIAN_PAIR_PRINTED_SPECTRA = (
    tuple(map(Fraction, ("0", "7/10", "13/6", "43/12", "437/120", "27/4"))),
    tuple(map(Fraction, ("0", "3/4", "13/6", "41/12", "71/20", "833/120"))),
)
# K_{1,3} + K_3 and C_6 + K_1: cospectral for both L and L2.
TWO_LAPLACIAN_PAIR = (
    disjoint_union(star_graph(4), complete(3)),
    disjoint_union(cycle(6), SimpleGraph(1, ())),
)
# Stencil coefficients for m <= 4, as tabulated in the literature.
COEFF_TABLE = {
    1: ("1",),
    2: ("4/3", "-1/12"),
    3: ("3/2", "-3/20", "1/90"),
    4: ("8/5", "-1/5", "8/315", "-1/560"),
}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _max_diff(a, b) -> float:
    a, b = np.sort(np.asarray(a, float)), np.sort(np.asarray(b, float))
    return float(np.max(np.abs(a - b), initial=0.0))


def _spectrum(mat) -> np.ndarray:
    return spectra.eig_symmetric(mat)


def check_coefficient_table() -> Check:
    bad = [(k, m) for m, row in COEFF_TABLE.items() for k, v in enumerate(row, start=1)
           if fd_coeffs.coeff(k, m) != Fraction(v)]
    return Check("stencil coefficient table m<=4", not bad, f"mismatches {bad}" if bad else "")


def check_moments(m_max: int = 8) -> Check:
    bad = []
    for m in range(1, m_max + 1):
        a = fd_coeffs.coeffs(m)
        for j in range(1, m + 1):
            s = sum(k ** (2 * j) * x for k, x in enumerate(a, start=1))
            if s != (1 if j == 1 else 0):
                bad.append((m, j))
    return Check(f"stencil moment identities m<={m_max}", not bad, f"failures {bad}" if bad else "")


def check_coeff_solver(m_max: int = 8) -> Check:
    bad = [m for m in range(1, m_max + 1) if tuple(fd_coeffs.solve_coeff_system(m)) != fd_coeffs.coeffs(m)]
    return Check(f"closed-form coefficients equal moment solve m<={m_max}", not bad, f"m={bad}" if bad else "")


def check_cycles(n_max: int = 15, m_max: int = 3, tol: float = 1e-9) -> Check:
    worst = 0.0
    for n in range(5, n_max + 1):
        for m in range(1, m_max + 1):
            if 2 * m + 1 <= n:
                worst = max(worst, _max_diff(_spectrum(m_laplacian(cycle(n), m)), spectra.cycle_m_spectrum(n, m)))
    return Check(f"cycle m-spectrum n<={n_max} m<={m_max}", worst < tol, f"max diff {worst:.2e}")


def check_complete(n_max: int = 12, m_max: int = 4, tol: float = 1e-9) -> Check:
    worst, bad = 0.0, []
    for n in range(2, n_max + 1):
        for m in range(1, min(m_max, n - 1) + 1):
            worst = max(worst, _max_diff(_spectrum(m_laplacian(complete(n), m)), spectra.complete_m_spectrum(n, m)))
        if n >= 3 and spectra.complete_m_eigenvalue(n, 2) != Fraction(n * (18 - n), 12):
            bad.append(n)
    ok = worst < tol and not bad
    return Check(f"complete-graph m-spectrum n<={n_max} m<={m_max}", ok,
                 f"max diff {worst:.2e}" + (f"; exact m=2 value wrong at n={bad}" if bad else ""))


def check_stars(n_max: int = 12, m_max: int = 3, tol: float = 1e-9) -> Check:
    worst = 0.0
    for n in range(3, n_max + 1):
        for m in range(1, min(m_max, n - 1) + 1):
            worst = max(worst, _max_diff(_spectrum(m_laplacian(star_graph(n), m)), spectra.star_m_spectrum(n, m)))
    return Check(f"star m-spectrum n<={n_max} m<={m_max}", worst < tol, f"max diff {worst:.2e}")


def check_circulants(n_max: int = 8, tol: float = 1e-9) -> Check:
    worst, count = 0.0, 0
    for n in range(3, n_max + 1):
        for r in range(1, n // 2 + 1):
            for jumps in combinations(range(1, n // 2 + 1), r):
                g = circulant(n, jumps)
                worst = max(worst, _max_diff(_spectrum(m_laplacian(g, 2)), spectra.circulant_two_spectrum(n, jumps)))
                count += 1
    return Check(f"circulant 2-spectrum, all {count} circulants n<={n_max}", worst < tol, f"max diff {worst:.2e}")


def check_psd_boundary(n_max: int = 20) -> Check:
    """``L2(K_n)`` is PSD exactly for ``n <= 18``."""
    bad = [n for n in range(1, n_max + 1)
           if spectra.is_psd(m_laplacian(complete(n), 2, extend=True), cross_check=False) != (n <= 18)]
    return Check(f"complete-graph 2-Laplacian PSD iff n<=18 (n<={n_max})", not bad, f"wrong at n={bad}" if bad else "")


def check_cartesian(pairs: int = 10, seed: int = 0) -> Check:
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(pairs):
        g = random_graph(int(rng.integers(3, 6)), 0.5, rng)
        h = random_graph(int(rng.integers(3, 6)), 0.5, rng)
        if not np.array_equal(two_laplacian_cartesian_identity(g, h), m_laplacian(cartesian_product(g, h), 2)):
            bad += 1
    return Check(f"2-Laplacian Cartesian-product identity ({pairs} pairs)", bad == 0, f"{bad} failures")


def check_complement(graphs: int = 100, seed: int = 1) -> Check:
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(graphs):
        g = random_graph(int(rng.integers(4, 10)), float(rng.uniform(0.2, 0.8)), rng)
        if not np.array_equal(two_laplacian_complement_identity(g), m_laplacian(complement(g), 2)):
            bad += 1
    return Check(f"2-Laplacian complement identity ({graphs} graphs)", bad == 0, f"{bad} failures")


def check_union_factorization(unions: int = 50, seed: int = 2) -> Check:
    """The characteristic polynomial of a disjoint union is the product of the parts'."""
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(unions):
        m = int(rng.integers(1, 4))
        g = random_graph(int(rng.integers(m + 1, 7)), 0.5, rng)
        h = random_graph(int(rng.integers(m + 1, 7)), 0.5, rng)
        whole = spectra.char_poly_exact(m_laplacian(disjoint_union(g, h), m))
        parts = spectra.char_poly_exact(m_laplacian(g, m)) * spectra.char_poly_exact(m_laplacian(h, m))
        bad += whole != parts
    return Check(f"disjoint-union charpoly factorization ({unions} unions)", bad == 0, f"{bad} failures")


def check_fiedler_sandwich(n: int = 7, tol: float = 1e-9) -> Check:
    checked = failed = 0
    for g in enumerate_nonisomorphic(n):
        rep = spectra.fiedler_bound_check(g, tol)
        if rep.hypothesis_met:
            checked += 1
            failed += not rep.holds
    return Check(f"Fiedler sandwich over PSD 2-Laplacians, n={n}", failed == 0,
                 f"{checked} PSD graphs, {failed} violations")


def check_laplacian_pair() -> Check:
    g, h = LAPLACIAN_PAIR
    lg, lh = m_laplacian(g, 2), m_laplacian(h, 2)
    mats_ok = all(s == 12 and np.array_equal(ints.astype(np.int64), np.array(want))
                  for (ints, s), want in zip((integer_scaled(lg), integer_scaled(lh)), LAPLACIAN_PAIR_SCALED))
    cospectral_l = spectra.char_poly_exact(classic_matrix(g, "laplacian")) == \
        spectra.char_poly_exact(classic_matrix(h, "laplacian"))
    keys_differ = spectra.char_poly_exact(lg) != spectra.char_poly_exact(lh)
    ok = mats_ok and cospectral_l and keys_differ
    return Check("L-cospectral pair separated by L2", ok,
                 f"matrices {'match' if mats_ok else 'differ'}, L-cospectral={cospectral_l}, L2 keys differ={keys_differ}")


def check_two_laplacian_pair() -> Check:
    g, h = TWO_LAPLACIAN_PAIR
    same = [spectra.char_poly_exact(kind(g)) == spectra.char_poly_exact(kind(h))
            for kind in (lambda x: classic_matrix(x, "laplacian"), lambda x: m_laplacian(x, 2))]
    return Check("K13+K3 and C6+K1 cospectral under L and L2", all(same), f"L={same[0]}, L2={same[1]}")


def check_regular_map(seed: int = 3) -> Check:
    """2-spectrum of regular graphs from adjacency eigenvalues."""
    worst = 0.0
    for g in [cycle(7), complete(6), circulant(9, (1, 3)), circulant(10, (2, 5))]:
        k = int(g.degrees[0])
        adj = spectra.eig_symmetric(fraction_matrix(classic_matrix(g, "adjacency")))
        worst = max(worst, _max_diff(spectra.regular_two_spectrum(adj, k), _spectrum(m_laplacian(g, 2))))
    return Check("regular-graph 2-spectrum map", worst < 1e-9, f"max diff {worst:.2e}")


CLOSED_FORM_CHECKS: tuple[Callable[[], Check], ...] = (
    check_cycles, check_complete, check_stars, check_circulants,
)
ALL_CHECKS: tuple[Callable[[], Check], ...] = (
    check_coefficient_table, check_moments, check_coeff_solver, *CLOSED_FORM_CHECKS, check_regular_map,
    check_psd_boundary, check_cartesian, check_complement, check_union_factorization,
    check_laplacian_pair, check_two_laplacian_pair, check_fiedler_sandwich,
)


def closed_forms(n_max: int = 15, m_max: int = 3) -> list[Check]:
    return [
        check_cycles(n_max, m_max),
        check_complete(min(n_max, 12), m_max),
        check_stars(min(n_max, 12), m_max),
        check_circulants(min(n_max, 8)),
    ]


def run_all() -> list[Check]:
    return [f() for f in ALL_CHECKS]
