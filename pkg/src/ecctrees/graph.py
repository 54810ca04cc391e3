"""Graphs, BFS distances, eccentricities and the eccentricity matrix.

Vertices are the dense integers ``0..n-1``. All objects are immutable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    DuplicateIndex,
    IndexOutOfRange,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class IntSymMatrix:
    """Dense symmetric matrix of small non-negative integers with zero diagonal."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise ValueError("matrix is not square")
            if row[i] != 0:
                raise ValueError(f"nonzero diagonal entry at {i}")
            for j in range(i):
                if row[j] != self.rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "IntSymMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def max_entry(self) -> int:
        return max((max(r) for r in self.rows if r), default=0)

    def frobenius_sq(self) -> int:
        return sum(x * x for r in self.rows for x in r)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def is_tree(self) -> bool:
        return len(self.edges) == self.n - 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def from_edge_list(pairs: Iterable[tuple[int, int]], n: int) -> Graph:
    """Build and validate a connected simple graph.

    Raises VertexOutOfRange, SelfLoop, DuplicateEdge or DisconnectedGraph.
    """
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be positive, got {n}")
    edges = set()
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in edges:
            raise DuplicateEdge(f"duplicate edge {key}")
        edges.add(key)
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(x)) for x in nbrs)
    seen = _bfs(adj, 0)
    if min(seen) < 0:
        missing = seen.index(-1)
        raise DisconnectedGraph(f"vertex {missing} is unreachable from vertex 0")
    return Graph(n, frozenset(edges), adj)


def _bfs(adj: Sequence[Sequence[int]], src: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


@dataclass(frozen=True)
class EccProfile:
    dist: IntSymMatrix
    ecc: tuple[int, ...]
    diameter: int


def ecc_profile(g: Graph) -> EccProfile:
    rows = tuple(tuple(_bfs(g.adj, u)) for u in range(g.n))
    ecc = tuple(max(r) for r in rows)
    return EccProfile(IntSymMatrix(rows), ecc, max(ecc))


def diameter(g: Graph) -> int:
    return ecc_profile(g).diameter


def double_sweep_diameter(g: Graph) -> int:
    """Two-BFS diameter; exact on trees only."""
    first = _bfs(g.adj, 0)
    far = first.index(max(first))
    return max(_bfs(g.adj, far))


def eccentricity_matrix(g: Graph, profile: EccProfile | None = None) -> IntSymMatrix:
    """Keep d(u, v) where it equals min(e(u), e(v)); zero elsewhere."""
    prof = profile or ecc_profile(g)
    ecc = prof.ecc
    rows = []
    for u, drow in enumerate(prof.dist.rows):
        eu = ecc[u]
        rows.append(tuple(d if d == min(eu, ecc[v]) and v != u else 0
                          for v, d in enumerate(drow)))
    return IntSymMatrix(tuple(rows))


def principal_submatrix(m: IntSymMatrix, idx: Sequence[int]) -> IntSymMatrix:
    idx = [int(i) for i in idx]
    if len(set(idx)) != len(idx):
        raise DuplicateIndex(f"repeated index in {idx}")
    for i in idx:
        if not 0 <= i < m.n:
            raise IndexOutOfRange(f"index {i} outside 0..{m.n - 1}")
    return IntSymMatrix(tuple(tuple(m.rows[i][j] for j in idx) for i in idx))


def nonzero_pattern_connected(m: IntSymMatrix) -> bool:
    """True when the graph of nonzero off-diagonal entries is connected (irreducibility)."""
    adj = [[j for j, x in enumerate(r) if x] for r in m.rows]
    return min(_bfs(adj, 0)) >= 0


# -- edge-list files ---------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` comments; optional leading ``n <count>`` header."""
    n = None
    pairs = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_data or n is not None or len(parts) != 2:
                raise ParseError(f"line {lineno}: header 'n <count>' must come first")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            seen_data = True
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex index")
        pairs.append((u, v))
        seen_data = True
    if n is None:
        if not pairs:
            raise ParseError("edge list is empty")
        n = 1 + max(max(p) for p in pairs)
    return from_edge_list(pairs, n)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"
