"""Cospectral-mate census over exhaustive graph corpora.

A graph "has a cospectral mate" for a matrix kind when some other graph in
the corpus (non-isomorphic, by construction of the corpus) has the same
characteristic polynomial for that kind.
"""
from __future__ import annotations

import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import fd_coeffs
from .graphs import GRAPH_COUNTS, MAX_BUILTIN_N, SimpleGraph, enumerate_nonisomorphic, iter_graph6_file
from .laplacians import MAX_M, classic_matrix, fraction_matrix, m_laplacian
from .paths import open_path_matrix
from .spectra import SpectralKey, key_from_integer_matrix

CORPUS_ENV = "MLAP_CORPUS_DIR"

_ALIASES = {
    "A": "A", "adj": "A", "adjacency": "A",
    "L": "L", "lap": "L", "laplacian": "L",
    "|L|": "|L|", "Q": "|L|", "SL": "|L|", "signless": "|L|", "signless_laplacian": "|L|",
}


def normalize_kind(kind: str) -> str:
    """Canonical kind name: ``A``, ``L``, ``|L|`` or ``L<m>`` (e.g. ``L2``)."""
    k = kind.strip()
    if k in _ALIASES:
        return _ALIASES[k]
    for prefix in ("L^(", "L("):
        if k.startswith(prefix) and k.endswith(")"):
            k = "L" + k[len(prefix):-1]
    if k.startswith("L") and k[1:].isdigit():
        m = int(k[1:])
        if not 1 <= m <= MAX_M:
            raise ValueError(f"m must be in 1..{MAX_M}, got {m}")
        return "L" if m == 1 else f"L{m}"
    raise ValueError(f"unknown matrix kind {kind!r}; use A, L, |L|, or L<m>")


def kind_m(kind: str) -> int | None:
    k = normalize_kind(kind)
    return int(k[1:]) if k[1:].isdigit() else None


def kind_matrix(g: SimpleGraph, kind: str) -> np.ndarray:
    """Exact matrix of the given kind (rational object array)."""
    k = normalize_kind(kind)
    if k == "A":
        return fraction_matrix(classic_matrix(g, "adjacency"))
    if k == "L":
        return fraction_matrix(classic_matrix(g, "laplacian"))
    if k == "|L|":
        return fraction_matrix(classic_matrix(g, "signless_laplacian"))
    return m_laplacian(g, int(k[1:]))


def _path_matrix_int(a: np.ndarray, k: int, g: SimpleGraph) -> np.ndarray:
    if k == 1:
        return a
    if k == 2:
        p = a @ a
    elif k == 3:
        d = a.sum(axis=1)
        p = a @ a @ a - a * (d[:, None] + d[None, :] - 1)
    else:
        return np.array(open_path_matrix(g, k).tolist(), dtype=np.int64)
    np.fill_diagonal(p, 0)
    return p


def scaled_kind_matrix(g: SimpleGraph, kind: str) -> tuple[np.ndarray, int]:
    """``(scale * M, scale)`` as an int64 matrix for the census fast path."""
    k = normalize_kind(kind)
    a = np.asarray(g.adjacency, dtype=np.int64)
    if k == "A":
        return a, 1
    d = np.diag(a.sum(axis=1))
    if k == "L":
        return d - a, 1
    if k == "|L|":
        return d + a, 1
    m = int(k[1:])
    if m >= g.n:
        raise ValueError(f"{k} needs n > {m}, got n={g.n}")
    scale = fd_coeffs.coeff_denominator_lcm(m)
    w = np.zeros_like(a)
    for j, c in enumerate(fd_coeffs.coeffs(m), start=1):
        w = w + int(c * scale) * _path_matrix_int(a, j, g)
    return np.diag(w.sum(axis=1)) - w, scale


def spectral_invariant(g: SimpleGraph, kind: str) -> SpectralKey:
    mat, scale = scaled_kind_matrix(g, kind)
    return key_from_integer_matrix(mat.tolist(), scale)


@dataclass(frozen=True)
class CensusReport:
    n: int
    kind: str
    total: int
    mates: int
    classes: tuple[tuple[int, ...], ...] = field(default=(), repr=False)
    elapsed: float = 0.0
    note: str = ""

    @property
    def proportion(self) -> Fraction:
        return Fraction(self.mates, self.total) if self.total else Fraction(0)

    def proportion_str(self, places: int = 5) -> str:
        """Proportion rounded half-up to ``places`` decimals (``"0"`` when there are no mates)."""
        if self.mates == 0:
            return "0"
        p = self.proportion
        q = Decimal(p.numerator) / Decimal(p.denominator)
        return str(q.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))

    def csv_line(self) -> str:
        return f"{self.n},{self.kind},{self.total},{self.mates},{self.proportion_str()}"


def _keys(args) -> list[SpectralKey]:
    graphs, kind = args
    return [spectral_invariant(g, kind) for g in graphs]


def _chunks(items: Sequence, size: int) -> Iterator[Sequence]:
    for i in range(0, len(items), size):
        yield items[i:i + size]


def count_cospectral_mates(graphs: Iterable[SimpleGraph], kind: str, jobs: int = 1) -> CensusReport:
    """Group the stream by :func:`spectral_invariant` and count graphs in classes of size >= 2.

    Keys are computed in chunks (in worker processes when ``jobs > 1``) and
    reduced in stream order, so the report does not depend on ``jobs``.
    """
    t0 = time.perf_counter()
    kind = normalize_kind(kind)
    graphs = list(graphs)
    if not graphs:
        return CensusReport(0, kind, 0, 0)
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise ValueError("census stream mixes graphs with different vertex counts")
    m = kind_m(kind)
    if m is not None and m >= n:
        return CensusReport(n, kind, len(graphs), 0, elapsed=time.perf_counter() - t0,
                            note=f"{kind} is undefined for n <= {m}; reported as 0 by convention")
    if jobs > 1 and len(graphs) > 2000:
        size = max(500, len(graphs) // (8 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            keys = [k for part in pool.map(_keys, ((c, kind) for c in _chunks(graphs, size))) for k in part]
    else:
        keys = _keys((graphs, kind))
    groups: dict[SpectralKey, list[int]] = defaultdict(list)
    for i, key in enumerate(keys):
        groups[key].append(i)
    classes = tuple(tuple(v) for v in groups.values() if len(v) > 1)
    mates = sum(len(c) for c in classes)
    return CensusReport(n, kind, len(graphs), mates, classes, time.perf_counter() - t0)


def corpus_path(n: int, corpus_dir: str | os.PathLike | None = None) -> Path:
    base = corpus_dir if corpus_dir is not None else os.environ.get(CORPUS_ENV, ".")
    return Path(base) / f"graph{n}.g6"


def load_corpus(n: int, corpus_dir: str | os.PathLike | None = None) -> list[SimpleGraph]:
    """All graphs on ``n`` vertices: built in for ``n <= 7``, else ``graph<n>.g6`` in the corpus dir.

    A file corpus must hold exactly the known number of graphs.
    """
    if n <= MAX_BUILTIN_N:
        return list(enumerate_nonisomorphic(n))
    path = corpus_path(n, corpus_dir)
    if not path.is_file():
        raise FileNotFoundError(f"no corpus for n={n}: expected graph6 file at {path}")
    graphs = list(iter_graph6_file(path))
    want = GRAPH_COUNTS.get(n)
    if want is not None and len(graphs) != want:
        raise ValueError(f"corpus {path} holds {len(graphs)} graphs, expected {want}")
    if any(g.n != n for g in graphs):
        raise ValueError(f"corpus {path} contains graphs that do not have {n} vertices")
    return graphs


def census_table(n_range: Iterable[int], kinds: Sequence[str], corpus_dir=None, jobs: int = 1,
                 proportions: bool = False, csv: bool = False) -> str:
    """Aligned text table of mate counts (or proportions) per ``n`` and kind."""
    kinds = [normalize_kind(k) for k in kinds]
    rows = []
    for n in n_range:
        graphs = load_corpus(n, corpus_dir)
        reports = [count_cospectral_mates(graphs, k, jobs=jobs) for k in kinds]
        rows.append((n, len(graphs), reports))
    if csv:
        return "\n".join(r.csv_line() for _, _, reps in rows for r in reps) + "\n"
    header = ["|V|", "G"] + kinds
    body = []
    for n, total, reps in rows:
        cells = [r.proportion_str() if proportions else str(r.mates) for r in reps]
        body.append([str(n), str(total)] + cells)
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in [header] + body]
    notes = sorted({r.note for _, _, reps in rows for r in reps if r.note})
    return "\n".join(lines + [f"* {x}" for x in notes]) + "\n"
