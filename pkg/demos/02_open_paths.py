"""Counting open paths, the combinatorial input of the m-Laplacian.

P_k[i, j] counts simple paths with k edges from i to j.  Small k have
algebraic forms; complete graphs have a closed count.
"""
import numpy as np

from mlaplacian import graphs, paths

g = graphs.petersen()
for k in (1, 2, 3, 4):
    p = paths.open_path_matrix(g, k)
    print(f"Petersen P_{k}: row 0 = {list(p[0])}")

# length 2 and 3 without enumeration
rng = np.random.default_rng(7)
h = graphs.random_graph(9, 0.5, rng)
print("P2 == A^2 - D:", np.array_equal(paths.open_path_matrix(h, 2), paths.open_path_matrix_2(h)))
print("P3 == A^3 - A o (d_i + d_j - 1):", np.array_equal(paths.open_path_matrix(h, 3), paths.open_path_matrix_3(h)))

# in K_n every ordered pair is joined by (k-1)! C(n-2, k-1) paths of length k
for k in range(1, 5):
    print(f"K_7, k={k}: {paths.open_path_matrix(graphs.complete(7), k)[0, 1]} ="
          f" {paths.complete_path_count(7, k)}")

# on a long cycle the only length-k paths reach the k-th neighbours
print(np.array_equal(paths.open_path_matrix(graphs.cycle(11), 3), paths.circulant_jump_matrix(11, 3)))
