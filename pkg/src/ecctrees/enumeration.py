"""Free-tree generation, canonical codes and exhaustive extremal search."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import OrderCapExceeded, ParseError
from .graph import Graph, eccentricity_matrix, ecc_profile, from_edge_list
from .spectral import ecc_energy, sym_eigenvalues

DEFAULT_CAP = 16
HARD_CAP = 18
TIE_TOL = 1e-9
POOL_MIN_ITEMS = 256  # below this a worker pool costs more than it saves
STATISTICS = ("xi1", "xi2", "energy")


# -- canonical codes ----------------------------------------------------------

def tree_centers(g: Graph) -> list[int]:
    """One or two centre vertices, found by repeatedly stripping leaves."""
    if g.n <= 2:
        return list(range(g.n))
    deg = [len(a) for a in g.adj]
    layer = [v for v in range(g.n) if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in g.adj[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _ahu(g: Graph, root: int, blocked: int = -1) -> str:
    order = []
    parent = {root: blocked}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in g.adj[v]:
            if w != parent[v]:
                parent[w] = v
                stack.append(w)
    codes: dict[int, list[str]] = {v: [] for v in order}
    for v in reversed(order):
        code = "(" + "".join(sorted(codes[v])) + ")"
        if v == root:
            return code
        codes[parent[v]].append(code)
    raise AssertionError("unreachable")


def canonical_code(g: Graph) -> str:
    """AHU encoding rooted at the centre, or at the central edge for bicentral trees."""
    if not g.is_tree:
        raise ValueError("canonical codes are defined for trees only")
    c = tree_centers(g)
    if len(c) == 1:
        return _ahu(g, c[0])
    left, right = sorted((_ahu(g, c[0], c[1]), _ahu(g, c[1], c[0])))
    return "[" + left + right + "]"


@dataclass(frozen=True)
class CanonicalTree:
    tree: Graph
    code: str

    @classmethod
    def of(cls, g: Graph) -> "CanonicalTree":
        return cls(g, canonical_code(g))


# -- level-sequence generation --------------------------------------------------

def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a rooted level sequence (levels counted from 0 at the root)."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """First root subtree (re-levelled) and the tree with that subtree removed."""
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    return [x - 1 for x in seq[1:m]], [0] + seq[m:]


def _is_center_canonical(left: list[int], rest: list[int]) -> bool:
    hl, hr = max(left), max(rest)
    if hr != hl:
        return hr > hl
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def _level_sequences(n: int) -> Iterator[list[int]]:
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        left, rest = _split(seq)
        while not _is_center_canonical(left, rest):
            p = len(left)
            jumped = _next_rooted(seq, p)
            if seq[p] > 2:
                h = max(_split(jumped)[0])
                tail = list(range(1, h + 2))
                jumped[len(jumped) - len(tail):] = tail
            seq = jumped
            left, rest = _split(seq)
        yield seq
        seq = _next_rooted(seq)


def level_sequence_to_graph(seq: Sequence[int]) -> Graph:
    last_at_level: dict[int, int] = {}
    edges = []
    for v, lev in enumerate(seq):
        if lev:
            edges.append((last_at_level[lev - 1], v))
        last_at_level[lev] = v
    return from_edge_list(edges, len(seq))


def free_trees(n: int, cap: int = HARD_CAP) -> Iterator[CanonicalTree]:
    """One representative per isomorphism class of trees on n vertices."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > min(cap, HARD_CAP):
        raise OrderCapExceeded(f"n={n} exceeds the enumeration cap {min(cap, HARD_CAP)}")
    if n <= 2:
        g = from_edge_list([(0, 1)] if n == 2 else [], n)
        yield CanonicalTree.of(g)
        return
    for seq in _level_sequences(n):
        yield CanonicalTree.of(level_sequence_to_graph(seq))


# -- Pruefer oracle --------------------------------------------------------------

def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    import heapq

    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    if n >= 2:
        edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(edges, n)


def _partitions(total: int, parts: int, largest: int) -> Iterator[list[int]]:
    if total == 0:
        yield [0] * parts
        return
    if parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for tail in _partitions(total - first, parts - 1, first):
            yield [first] + tail


def _multiset_permutations(counts: list[int], length: int) -> Iterator[tuple[int, ...]]:
    buf = [0] * length

    def rec(pos):
        if pos == length:
            yield tuple(buf)
            return
        for sym, left in enumerate(counts):
            if left:
                counts[sym] -= 1
                buf[pos] = sym
                yield from rec(pos + 1)
                counts[sym] += 1

    yield from rec(0)


def prufer_sequences(n: int, degree_sorted: bool = True) -> Iterator[tuple[int, ...]]:
    """Pruefer sequences of labelled trees on n vertices.

    With ``degree_sorted`` only labellings with deg(0) >= deg(1) >= ... are
    produced; every isomorphism class still has such a labelling.
    """
    if n < 2:
        return
    if not degree_sorted:
        yield from itertools.product(range(n), repeat=n - 2)
        return
    for counts in _partitions(n - 2, n, n - 2):
        yield from _multiset_permutations(list(counts), n - 2)


def prufer_tree_codes(n: int, degree_sorted: bool = True) -> set[str]:
    """Canonical codes of all trees reachable through Pruefer decoding."""
    if n == 1:
        return {canonical_code(from_edge_list([], 1))}
    return {canonical_code(prufer_decode(s, n)) for s in prufer_sequences(n, degree_sorted)}


# -- statistics and search ----------------------------------------------------------

@dataclass(frozen=True)
class TreeFilter:
    kind: str = "all"  # all | exclude_star | diameter
    dmin: int = 0
    dmax: int = 10**9

    @classmethod
    def parse(cls, text: str) -> "TreeFilter":
        t = text.strip().lower()
        if t in ("all", ""):
            return cls()
        if t.replace("-", "_") in ("exclude_star", "exclude_stars", "nonstar"):
            return cls("exclude_star")
        if t.startswith("diameter:"):
            lo, sep, hi = t[len("diameter:"):].partition("-")
            try:
                lo_i = int(lo)
                hi_i = int(hi) if sep else lo_i
            except ValueError:
                raise ParseError(f"bad diameter range {text!r}") from None
            return cls("diameter", lo_i, hi_i)
        raise ParseError(f"unknown filter {text!r}; use all, exclude_star or diameter:LO-HI")

    def __str__(self):
        return f"diameter:{self.dmin}-{self.dmax}" if self.kind == "diameter" else self.kind


def is_star(g: Graph) -> bool:
    return g.n >= 2 and g.is_tree and max(len(a) for a in g.adj) == g.n - 1


def tree_stats(g: Graph) -> dict[str, float]:
    """xi1, xi2, energy and diameter of one tree."""
    prof = ecc_profile(g)
    spec = sym_eigenvalues(eccentricity_matrix(g, prof))
    vals = spec.values
    return {
        "xi1": vals[0],
        "xi2": vals[1] if len(vals) > 1 else math.nan,
        "energy": ecc_energy(spec),
        "diameter": prof.diameter,
    }


def _evaluate(item: tuple[int, tuple[tuple[int, int], ...], str]) -> tuple[float, float, float, int, str]:
    n, edges, code = item
    st = tree_stats(from_edge_list(edges, n))
    return st["xi1"], st["xi2"], st["energy"], st["diameter"], code


@dataclass(frozen=True)
class Evaluated:
    code: str
    edges: tuple[tuple[int, int], ...]
    n: int
    diameter: int
    xi1: float
    xi2: float
    energy: float
    star: bool

    def value(self, statistic: str) -> float:
        return getattr(self, statistic)

    def graph(self) -> Graph:
        return from_edge_list(self.edges, self.n)


def evaluate_all(n: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> list[Evaluated]:
    """Spectral statistics for every free tree of order n, in generation order."""
    trees = list(free_trees(n, cap=cap))
    items = [(t.tree.n, tuple(t.tree.sorted_edges()), t.code) for t in trees]
    if jobs > 1 and len(items) >= POOL_MIN_ITEMS:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, items, chunksize=max(1, len(items) // (4 * jobs))))
    else:
        results = [_evaluate(it) for it in items]
    out = []
    for t, (x1, x2, en, diam, code) in zip(trees, results):
        out.append(Evaluated(code, tuple(t.tree.sorted_edges()), n, diam, x1, x2, en, is_star(t.tree)))
    return out


def _keep(e: Evaluated, flt: TreeFilter) -> bool:
    if flt.kind == "exclude_star":
        return not e.star
    if flt.kind == "diameter":
        return flt.dmin <= e.diameter <= flt.dmax
    return True


def rank_trees(n: int, statistic: str, flt: TreeFilter | str = "all", jobs: int = 1,
               cap: int = DEFAULT_CAP, evaluated: list[Evaluated] | None = None) -> list[Evaluated]:
    """Filtered trees sorted by (statistic value, canonical code)."""
    if statistic not in STATISTICS:
        raise ParseError(f"unknown statistic {statistic!r}; choose from {STATISTICS}")
    if isinstance(flt, str):
        flt = TreeFilter.parse(flt)
    pool = evaluated if evaluated is not None else evaluate_all(n, jobs, cap)
    kept = [e for e in pool if _keep(e, flt) and not math.isnan(e.value(statistic))]
    kept.sort(key=lambda e: (e.value(statistic), e.code))
    return kept


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    statistic: str
    filter: str
    considered: int
    winners: tuple[tuple[CanonicalTree, float], ...]
    margin: float
    unique: bool

    @property
    def value(self) -> float:
        return self.winners[0][1]


def extremal_search(n: int, statistic: str, flt: TreeFilter | str = "all", jobs: int = 1,
                    cap: int = DEFAULT_CAP, evaluated: list[Evaluated] | None = None) -> ExtremalReport:
    """Minimise a statistic over all free trees of order n passing the filter."""
    if isinstance(flt, str):
        flt = TreeFilter.parse(flt)
    ranked = rank_trees(n, statistic, flt, jobs, cap, evaluated)
    if not ranked:
        raise ValueError(f"no tree of order {n} passes filter {flt}")
    best = ranked[0].value(statistic)
    winners = tuple((CanonicalTree(e.graph(), e.code), e.value(statistic))
                    for e in ranked if e.value(statistic) - best <= TIE_TOL)
    runner_up = ranked[len(winners)].value(statistic) if len(ranked) > len(winners) else math.inf
    margin = runner_up - best
    return ExtremalReport(n, statistic, str(flt), len(ranked), winners, margin,
                          len(winners) == 1 and margin > TIE_TOL)
