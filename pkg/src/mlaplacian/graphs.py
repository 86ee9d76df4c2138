"""Simple graphs, standard constructions, graph6 I/O and small-n enumeration.

Vertices are labelled ``0..n-1``.  A :class:`SimpleGraph` is immutable; its
edge set is stored as a sorted tuple of pairs ``(i, j)`` with ``i < j``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

GRAPH6_HEADER = ">>graph6<<"

# Number of non-isomorphic simple graphs on n vertices (OEIS A000088).
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}

MAX_BUILTIN_N = 7


class Graph6Error(ValueError):
    """Malformed graph6 record; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CapabilityError(RuntimeError):
    """Requested computation is outside what the built-in machinery supports."""


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a graph needs at least one vertex, got n={self.n}")
        norm = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_adjacency(cls, adj) -> SimpleGraph:
        a = np.asarray(adj)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if np.any(np.diag(a)):
            raise ValueError("adjacency must have an empty diagonal")
        iu, ju = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], tuple(zip(iu.tolist(), ju.tolist())))

    @cached_property
    def adjacency(self) -> np.ndarray:
        """0/1 adjacency matrix as an int64 array (read-only)."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        a.setflags(write=False)
        return a

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def relabel(self, perm: Iterable[int]) -> SimpleGraph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return SimpleGraph(self.n, tuple((p[u], p[v]) for u, v in self.edges))

    def __str__(self):
        return f"SimpleGraph(n={self.n}, m={self.num_edges})"


# ---------------------------------------------------------------------------
# standard families

def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return SimpleGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple(itertools.combinations(range(n), 2)))


def star_graph(n: int) -> SimpleGraph:
    """Star on ``n`` vertices (``n - 1`` leaves), centre at vertex 0."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return SimpleGraph(n, tuple((0, i) for i in range(1, n)))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    if a < 1 or b < 1:
        raise ValueError("both parts must be non-empty")
    return SimpleGraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def _check_jumps(n: int, jumps: Iterable[int]) -> tuple[int, ...]:
    s = tuple(sorted(set(int(x) for x in jumps)))
    if not s:
        raise ValueError("jump set must be non-empty")
    if s[0] < 1 or 2 * s[-1] > n:
        raise ValueError(f"jumps must satisfy 1 <= s <= n/2, got {s} for n={n}")
    return s


def circulant(n: int, jumps: Iterable[int]) -> SimpleGraph:
    """Circulant graph: vertex ``i`` adjacent to ``i +- s (mod n)`` for each jump ``s``."""
    if n < 3:
        raise ValueError(f"circulant needs n >= 3, got {n}")
    s = _check_jumps(n, jumps)
    return SimpleGraph(n, tuple((i, (i + k) % n) for k in s for i in range(n)))


def circulant_degree(n: int, jumps: Iterable[int]) -> int:
    s = _check_jumps(n, jumps)
    return 2 * len(s) - (1 if 2 * s[-1] == n else 0)


def prism(n: int) -> SimpleGraph:
    """``C_n x K_2``; for odd n this is isomorphic to ``circulant(2n, {2, n})``."""
    return cartesian_product(cycle(n), complete(2))


def moebius_ladder(n: int) -> SimpleGraph:
    return circulant(2 * n, (1, n))


def antiprism(n: int) -> SimpleGraph:
    return circulant(2 * n, (1, 2))


def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, tuple(outer + spokes + inner))


# ---------------------------------------------------------------------------
# operators

def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    shift = g.n
    return SimpleGraph(g.n + h.n, g.edges + tuple((u + shift, v + shift) for u, v in h.edges))


def cartesian_product(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Vertex ``(v, w)`` is numbered ``v * h.n + w``."""
    a = np.kron(g.adjacency, np.eye(h.n, dtype=np.int64)) + np.kron(np.eye(g.n, dtype=np.int64), h.adjacency)
    return SimpleGraph.from_adjacency(a)


def tensor_product(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    return SimpleGraph.from_adjacency(np.kron(g.adjacency, h.adjacency))


def complement(g: SimpleGraph) -> SimpleGraph:
    a = 1 - g.adjacency - np.eye(g.n, dtype=np.int64)
    return SimpleGraph.from_adjacency(a)


def delete_vertex(g: SimpleGraph, v: int) -> SimpleGraph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    keep = [i for i in range(g.n) if i != v]
    return SimpleGraph.from_adjacency(g.adjacency[np.ix_(keep, keep)])


def random_graph(n: int, p: float = 0.5, rng: np.random.Generator | None = None) -> SimpleGraph:
    rng = np.random.default_rng() if rng is None else rng
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return SimpleGraph(n, tuple(e for e, k in zip(pairs, keep) if k))


# ---------------------------------------------------------------------------
# graph6

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: SimpleGraph) -> str:
    a = g.adjacency
    bits = [int(a[i, j]) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(line: str) -> SimpleGraph:
    s = line.strip()
    start = 0
    if s.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    s = s[start:]
    if not s:
        raise Graph6Error("empty graph6 record", start)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126", start + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise Graph6Error("truncated 18-bit vertex count", start + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated 36-bit vertex count", start + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    if n < 1:
        raise Graph6Error("graph6 record encodes zero vertices", start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise Graph6Error(
            f"expected {need} edge bytes for n={n}, found {len(vals) - pos}",
            start + min(len(vals), pos + need),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return SimpleGraph(n, tuple(edges))


def iter_graph6_file(path: str | Path) -> Iterator[SimpleGraph]:
    """Yield graphs from a graph6 file, one record per line; a leading header is skipped."""
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line == GRAPH6_HEADER:
                continue
            yield parse_graph6(line)


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse ``"n\\nu v\\nu v ..."`` (0-based vertices; ``#`` starts a comment)."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 1:
        raise ValueError("edge list must start with a line holding the vertex count")
    n = int(rows[0][0])
    edges = []
    for r in rows[1:]:
        if len(r) != 2:
            raise ValueError(f"bad edge line: {' '.join(r)!r}")
        edges.append((int(r[0]), int(r[1])))
    return SimpleGraph(n, tuple(edges))


def write_edge_list(g: SimpleGraph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def load_graphs(path: str | Path) -> list[SimpleGraph]:
    """Read a graph file in either graph6 or edge-list form."""
    text = Path(path).read_text(encoding="ascii")
    first = next((x for x in (ln.split("#", 1)[0].strip() for ln in text.splitlines()) if x), "")
    if first.isdigit():
        return [parse_edge_list(text)]
    return list(iter_graph6_file(path))


# ---------------------------------------------------------------------------
# canonical form and enumeration

def _refine_colors(adj: np.ndarray) -> list[int]:
    """Colour refinement starting from degrees; colours are ranked canonically."""
    n = adj.shape[0]
    nbrs = [np.flatnonzero(adj[v]).tolist() for v in range(n)]
    colors = adj.sum(axis=1).tolist()
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


@lru_cache(maxsize=None)
def _triu_index(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    iu, ju = np.triu_indices(n, 1)
    weights = np.array([1 << (len(iu) - 1 - t) for t in range(len(iu))], dtype=np.int64)
    return iu, ju, weights


def canonical_code(g: SimpleGraph) -> int:
    """Isomorphism-invariant integer code of ``g``.

    The code is the largest upper-triangle adjacency bit string over all vertex
    orderings that list refined colour classes in canonical order.  Two graphs
    on the same number of vertices are isomorphic iff their codes agree.
    Supported for ``n <= 9``; the search is over at most ``n!`` orderings.
    """
    n = g.n
    if n > 9:
        raise CapabilityError("canonical_code supports n <= 9")
    if n == 1:
        return 0
    adj = np.asarray(g.adjacency)
    colors = _refine_colors(adj)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    cell_perms = [list(itertools.permutations(c)) for c in cells]
    perms = np.array([sum(choice, ()) for choice in itertools.product(*cell_perms)], dtype=np.int64)
    iu, ju, weights = _triu_index(n)
    bits = adj[perms[:, iu], perms[:, ju]]
    return int((bits @ weights).max())


def canonical_form(g: SimpleGraph) -> SimpleGraph:
    """The graph whose upper-triangle bit string is ``canonical_code(g)``."""
    code = canonical_code(g)
    iu, ju, _ = _triu_index(g.n)
    L = len(iu)
    edges = tuple((int(iu[t]), int(ju[t])) for t in range(L) if (code >> (L - 1 - t)) & 1)
    return SimpleGraph(g.n, edges)


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_code(g) == canonical_code(h)


@lru_cache(maxsize=None)
def _nonisomorphic(n: int) -> tuple[SimpleGraph, ...]:
    if n == 1:
        return (SimpleGraph(1),)
    seen: dict[int, SimpleGraph] = {}
    for base in _nonisomorphic(n - 1):
        for mask in range(1 << (n - 1)):
            new = base.edges + tuple((v, n - 1) for v in range(n - 1) if mask >> v & 1)
            g = SimpleGraph(n, new)
            code = canonical_code(g)
            if code not in seen:
                seen[code] = g
    ordered = sorted(seen, key=lambda c: (bin(c).count("1"), c))
    return tuple(canonical_form(seen[c]) for c in ordered)


def enumerate_nonisomorphic(n: int) -> Iterator[SimpleGraph]:
    """All simple graphs on ``n`` vertices up to isomorphism, in a fixed order.

    Each graph on n vertices arises from one on n-1 vertices by adding a vertex
    with some neighbourhood, so extending every (n-1)-graph in all ways and
    deduplicating by :func:`canonical_code` is exhaustive.  Graphs are yielded
    in canonical labelling, sorted by edge count then code.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_BUILTIN_N:
        raise CapabilityError(
            f"built-in enumeration stops at n={MAX_BUILTIN_N}; read n={n} from a graph6 corpus "
            f"(e.g. nauty `geng {n}`) with iter_graph6_file"
        )
    return iter(_nonisomorphic(n))
