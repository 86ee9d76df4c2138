"""m-Laplacians, their exact characteristic polynomials and closed-form spectra."""
import numpy as np

from mlaplacian import graphs, spectra, verify
from mlaplacian.laplacians import integer_scaled, m_laplacian

# cycles, complete graphs and stars have explicit spectra
print("C_9, m=3:", np.round(spectra.cycle_m_spectrum(9, 3), 6))
print("direct  :", np.round(spectra.eig_symmetric(m_laplacian(graphs.cycle(9), 3)), 6))
for n in (6, 12, 18, 19):
    print(f"K_{n}: nonzero 2-Laplacian eigenvalue {spectra.complete_m_eigenvalue(n, 2)}")

# so L2(K_n) stops being positive semidefinite after n = 18
print("PSD:", [n for n in range(3, 22) if spectra.is_psd(m_laplacian(graphs.complete(n), 2), cross_check=False)])

# circulants: the 2-spectrum follows from adjacency eigenvalues
print("Moebius ladder M_3:", np.round(spectra.circulant_two_spectrum(6, (1, 3)), 6))

# two graphs with the same Laplacian spectrum that the 2-Laplacian separates
g, h = verify.LAPLACIAN_PAIR
for x in (g, h):
    ints, scale = integer_scaled(m_laplacian(x, 2))
    key = spectra.char_poly_exact(m_laplacian(x, 2))
    print(f"\n{scale} * L2 =\n{ints}\ncharpoly: {key}")
    print("eigenvalues:", np.round(spectra.eig_symmetric(m_laplacian(x, 2)), 9))

# the Fiedler sandwich 4/3 mu2 - n(n-2)/6 <= lambda2 <= 4/3 mu2
for x in (graphs.cycle(7), graphs.petersen(), graphs.star_graph(6)):
    r = spectra.fiedler_bound_check(x)
    print(f"n={x.n}: {r.lower:.4f} <= {r.lambda2:.4f} <= {r.upper:.4f}  holds={r.holds}")
