"""m-Laplacians of graphs built from high-order finite-difference stencils."""
from .census import CensusReport, census_table, count_cospectral_mates, load_corpus, spectral_invariant
from .fd_coeffs import (
    apply_discrete_laplacian, coeff, coeffs, convergence_study, cycle_poly_coeffs, solve_coeff_system,
)
from .graphs import (
    CapabilityError, Graph6Error, SimpleGraph, antiprism, cartesian_product, circulant, complement, complete,
    complete_bipartite, cycle, delete_vertex, disjoint_union, enumerate_nonisomorphic, is_isomorphic,
    iter_graph6_file, moebius_ladder, parse_graph6, petersen, prism, star_graph, tensor_product, write_graph6,
)
from .laplacians import (
    WeightedGraph, classic_matrix, integer_scaled, m_adjacency, m_laplacian, two_laplacian_cartesian_identity,
    two_laplacian_complement_identity, two_laplacian_direct, weighted_laplacian,
)
from .paths import circulant_jump_matrix, open_path_matrix, open_path_matrix_2, open_path_matrix_3
from .spectra import (
    SpectralKey, char_poly_exact, circulant_two_spectrum, complete_m_spectrum, cycle_m_spectrum, eig_symmetric,
    fiedler_bound_check, fiedler_value, is_psd, regular_two_spectrum, second_smallest, star_m_spectrum,
)
from .synthesis import TargetSpectrum, build_weighted_from_spectrum, embed_spectrum, sine_system_matrix, synthesize

__version__ = "0.1.0"
