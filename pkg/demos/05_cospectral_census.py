"""How often do graphs share a spectrum?

For every graph on n <= 7 vertices we group by exact characteristic
polynomial and count graphs that have a cospectral mate.  Set
MLAP_CORPUS_DIR to a directory holding graph8.g6 to add n = 8.
"""
import os

from mlaplacian import census

ns = list(range(1, 8))
if os.environ.get(census.CORPUS_ENV):
    ns.append(8)
print(census.census_table(ns, ["A", "L", "|L|", "L2", "L3"]))
print(census.census_table(ns, ["A", "L", "|L|", "L2"], proportions=True))

# the one L2 class on 7 vertices
gs = census.load_corpus(7)
rep = census.count_cospectral_mates(gs, "L2")
for cls in rep.classes:
    print("L2-cospectral:", [sorted(gs[i].edges) for i in cls])
