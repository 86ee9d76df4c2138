"""High-order periodic stencils for -u'' and their exact coefficients.

The weights a_{k,m} of u[i+k] - 2u[i] + u[i-k] are rational; we print them,
check the moment conditions that define them, and watch the error fall like
h^(2m) on a smooth periodic function.
"""
from fractions import Fraction

import numpy as np

from mlaplacian import fd_coeffs

for m in range(1, 6):
    row = ", ".join(str(a) for a in fd_coeffs.coeffs(m))
    print(f"m={m}: {row}")

# the same numbers fall out of the moment system solved by fraction-free elimination
assert all(tuple(fd_coeffs.solve_coeff_system(m)) == fd_coeffs.coeffs(m) for m in range(1, 9))
a = fd_coeffs.coeffs(4)
print("sum k^2 a_k =", sum(k * k * x for k, x in enumerate(a, 1)),
      "| sum k^4 a_k =", sum(k ** 4 * x for k, x in enumerate(a, 1)))

print("\norder of accuracy on sin over [0, 2 pi)")
for m in (1, 2, 3):
    hs, errs, slope = fd_coeffs.convergence_study(m)
    print(f"m={m}: errors " + " ".join(f"{e:.1e}" for e in errs) + f" -> slope {slope:.3f}")

# in double precision the m=3 errors hit rounding before n=256
_, errs64, slope64 = fd_coeffs.convergence_study(3, dtype=np.float64)
print(f"m=3 in float64: last error {errs64[-1]:.1e}, slope {slope64:.3f}")

# on a cycle the m-Laplacian is a polynomial in the adjacency matrix
print("\nL^(m)(C_n) = sum_k c_k A^k:")
for m in (1, 2, 3):
    print(f"m={m}:", [str(Fraction(c)) for c in fd_coeffs.cycle_poly_coeffs(m)])
