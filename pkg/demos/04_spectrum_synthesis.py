"""Weighted circulants with a prescribed Laplacian spectrum.

Any list of m numbers, each doubled and joined with 0, is the Laplacian
spectrum of a weighted graph on 2m+1 vertices with jump weights c_k.
"""
import numpy as np

from mlaplacian import synthesis
from mlaplacian.laplacians import weighted_laplacian
from mlaplacian.spectra import eig_symmetric

t = synthesis.TargetSpectrum.from_multiset([0, 1, 1, 2, 2, -3, -3])
syn = synthesis.synthesize(t)
print("jump weights:", np.round(syn.jump_weights, 6))
print("spectrum    :", np.round(eig_symmetric(weighted_laplacian(syn.graph)), 10))

# even shape: one value appears once
t = synthesis.TargetSpectrum((4.0, 7.0), single=-1.0)
print("\neven target:", t.multiset())
print("realized   :", np.round(synthesis.synthesize(t).spectrum, 10))

# embedding m chosen values into a 2m x 2m matrix by deleting one vertex
vals = [-2.0, 1.0, 3.5]
emb = synthesis.embed_spectrum(vals)
print("\nprincipal submatrix spectrum:", np.round(emb.submatrix_spectrum, 8))
print("interlacing positions:", synthesis.interlacing_positions(vals))
print("vertex-deleted graph spectrum:", np.round(emb.graph_spectrum, 8))
