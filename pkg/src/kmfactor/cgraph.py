"""The graph invariant c(G), computed three independent ways.

``c_direct`` sums signed counts of ordered k-partitions into independent sets,
``c_dc`` runs deletion-contraction down to trees and disconnected graphs, and
``leaf_reduce`` strips pendant vertices (which leaves c unchanged).  All three
agree on every graph; the test-suite checks this exhaustively on small graphs.

Vertices are always ``0 .. n-1``.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import GraphFormatError, NonIntegralResult, NotAnEdge

Edge = tuple[int, int]


@dataclass(frozen=True)
class DynkinGraph:
    """A simple undirected graph on ``n`` vertices labelled ``0 .. n-1``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphFormatError(f"vertex count must be a positive integer, got {self.n!r}")
        norm = set()
        for e in self.edges:
            i, j = e
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphFormatError(f"edge {e} out of range for {self.n} vertices")
            if i == j:
                raise GraphFormatError(f"loop at vertex {i}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def path(cls, n: int) -> DynkinGraph:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> DynkinGraph:
        if n < 3:
            raise GraphFormatError("a simple cycle needs at least 3 vertices")
        return cls(n, frozenset((i, (i + 1) % n) for i in range(n)))

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(a) for a in adj)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def component_of(self, v: int, skip_edge: Edge | None = None) -> set[int]:
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if skip_edge is not None and (min(u, w), max(u, w)) == skip_edge:
                    continue
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def is_connected(self) -> bool:
        return len(self.component_of(0)) == self.n

    def is_tree(self) -> bool:
        return len(self.edges) == self.n - 1 and self.is_connected()

    def is_independent(self, vertices) -> bool:
        vs = set(vertices)
        return all(not (self.adjacency[v] & vs) for v in vs)


# -- file format ------------------------------------------------------------

def format_graph(G: DynkinGraph) -> str:
    lines = [f"vertices {G.n}"]
    lines += [f"edge {i} {j}" for i, j in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> DynkinGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "vertices":
        raise GraphFormatError(f"expected 'vertices <n>', got {lines[0]!r}")
    try:
        n = int(head[1])
        edges = set()
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 3 or parts[0] != "edge":
                raise GraphFormatError(f"expected 'edge <i> <j>', got {ln!r}")
            e = (int(parts[1]), int(parts[2]))
            key = (min(e), max(e))
            if key in edges:
                raise GraphFormatError(f"repeated edge {e}")
            edges.add(key)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc
    return DynkinGraph(n, frozenset(edges))


# -- independent sets and k-partitions --------------------------------------

def _adjacency_masks(G: DynkinGraph) -> list[int]:
    return [sum(1 << u for u in G.adjacency[v]) for v in range(G.n)]


def _mask_independent(mask: int, adj: list[int]) -> bool:
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if adj[v] & mask:
            return False
        m ^= low
    return True


def _members(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def totally_disconnected_subsets(G: DynkinGraph) -> list[frozenset]:
    """All non-empty independent vertex sets, ordered by size then lexicographically."""
    adj = _adjacency_masks(G)
    found = [_members(m) for m in range(1, 1 << G.n) if _mask_independent(m, adj)]
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def _partition_table(G: DynkinGraph) -> list[int]:
    """``table[k]`` = number of unordered partitions of V into k independent sets."""
    adj = _adjacency_masks(G)
    indep: dict[int, bool] = {}

    def independent(mask):
        hit = indep.get(mask)
        if hit is None:
            hit = indep[mask] = _mask_independent(mask, adj)
        return hit

    memo: dict[int, list[int]] = {0: [1]}

    def count(S: int) -> list[int]:
        if S in memo:
            return memo[S]
        low = S & -S
        rest = S ^ low
        total: list[int] = []
        # the part holding the lowest remaining vertex, over submasks of the rest
        sub = rest
        while True:
            part = sub | low
            if independent(part):
                for k, c in enumerate(count(S ^ part)):
                    while len(total) <= k + 1:
                        total.append(0)
                    total[k + 1] += c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        memo[S] = total
        return total

    return count((1 << G.n) - 1)


def k_partition_counts(G: DynkinGraph) -> dict[int, int]:
    """The full table ``{k: c_k(G)}`` for ``1 <= k <= n``."""
    table = _partition_table(G)
    return {k: (math.factorial(k) * table[k] if k < len(table) else 0)
            for k in range(1, G.n + 1)}


def count_k_partitions(G: DynkinGraph, k: int) -> int:
    """Number of ordered k-partitions of G.

    Counted as k! times the unordered count; the unordered count always
    places the lowest uncovered vertex next, so no tuple is seen twice.
    """
    if not 1 <= k <= G.n:
        raise ValueError(f"k must lie in 1..{G.n}, got {k}")
    return k_partition_counts(G)[k]


def k_partitions(G: DynkinGraph, k: int):
    """Yield every ordered k-partition ``(J_1, ..., J_k)`` as a tuple of frozensets.

    Plain backtracking over ordered tuples; meant for small test fixtures.
    """
    indep = totally_disconnected_subsets(G)
    full = frozenset(range(G.n))

    def extend(prefix, used):
        if len(prefix) == k:
            if used == full:
                yield tuple(prefix)
            return
        remaining = full - used
        slots = k - len(prefix)
        if len(remaining) < slots:
            return
        for J in indep:
            if J & used:
                continue
            prefix.append(J)
            yield from extend(prefix, used | J)
            prefix.pop()

    yield from extend([], frozenset())


def c_direct(G: DynkinGraph) -> int:
    """c(G) = (-1)^l * sum_k (-1)^k c_k(G) / k, evaluated exactly."""
    total = Fraction(0)
    for k, ck in k_partition_counts(G).items():
        total += Fraction((-1) ** k * ck, k)
    total *= (-1) ** G.n
    if total.denominator != 1 or total < 0:
        raise NonIntegralResult(f"c(G) evaluated to {total} for {format_graph(G)!r}")
    return int(total)


# -- graph surgery ----------------------------------------------------------

def _relabel(keep: list[int], edges) -> DynkinGraph:
    index = {v: i for i, v in enumerate(keep)}
    return DynkinGraph(len(keep), frozenset(
        (index[i], index[j]) for i, j in edges if i in index and j in index))


def remove_vertex(G: DynkinGraph, v: int) -> DynkinGraph:
    """Delete ``v`` and its edges; survivors keep their relative order."""
    if G.n < 2:
        raise ValueError("cannot remove the only vertex")
    keep = [u for u in range(G.n) if u != v]
    return _relabel(keep, G.edges)


def _as_edge(G: DynkinGraph, e) -> Edge:
    i, j = e
    key = (min(i, j), max(i, j))
    if key not in G.edges:
        raise NotAnEdge(f"{e} is not an edge")
    return key


def delete_edge(G: DynkinGraph, e) -> DynkinGraph:
    key = _as_edge(G, e)
    return DynkinGraph(G.n, G.edges - {key})


def contract_edge(G: DynkinGraph, e) -> DynkinGraph:
    """Merge the endpoints of ``e`` into one new vertex, placed last.

    The other vertices keep their relative order; the new vertex is adjacent
    to everything either endpoint was adjacent to.
    """
    p, q = _as_edge(G, e)
    keep = [u for u in range(G.n) if u not in (p, q)]
    index = {v: i for i, v in enumerate(keep)}
    r = len(keep)
    edges = {(index[i], index[j]) for i, j in G.edges if i in index and j in index}
    for s in (G.adjacency[p] | G.adjacency[q]) - {p, q}:
        edges.add((index[s], r))
    return DynkinGraph(r + 1, frozenset(edges))


def cycle_edges(G: DynkinGraph) -> list[Edge]:
    """Edges lying on some cycle (the non-bridges), sorted."""
    return [e for e in G.sorted_edges() if e[1] in G.component_of(e[0], skip_edge=e)]


# -- canonical labelling ----------------------------------------------------

def _rerank(keys) -> list[int]:
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(G: DynkinGraph, colors: list[int]) -> list[int]:
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in G.adjacency[v])))
               for v in range(G.n)]
        new = _rerank(sig)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(G: DynkinGraph) -> tuple:
    """An isomorphism-invariant key: ``(n, edges under a canonical relabelling)``.

    Colour refinement, then individualize each vertex of the first
    non-singleton cell and recurse; the lexicographically least edge list
    over all leaves wins.
    """
    best = None
    init = _rerank([G.degree(v) for v in range(G.n)])

    def search(colors):
        nonlocal best
        colors = _refine(G, colors)
        if len(set(colors)) == G.n:
            code = tuple(sorted((min(colors[i], colors[j]), max(colors[i], colors[j]))
                                for i, j in G.edges))
            if best is None or code < best:
                best = code
            return
        sizes = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, s in sizes.items() if s > 1)
        for v in range(G.n):
            if colors[v] == target:
                search(_rerank([(colors[u], 0 if u == v else 1) for u in range(G.n)]))

    search(init)
    return (G.n, best)


# -- deletion-contraction and leaf reduction -------------------------------

def c_dc(G: DynkinGraph, memo: dict | None = None) -> int:
    """c(G) by deletion-contraction on the smallest edge that lies on a cycle.

    Disconnected graphs give 0 and trees give 1.  Intermediate results are
    memoized on ``canonical_form``; pass a dict to share the table across calls.
    """
    if memo is None:
        memo = {}
    if not G.is_connected():
        return 0
    if G.is_tree():
        return 1
    key = canonical_form(G)
    if key in memo:
        return memo[key]
    e = cycle_edges(G)[0]
    value = c_dc(delete_edge(G, e), memo) + c_dc(contract_edge(G, e), memo)
    memo[key] = value
    return value


def leaf_reduce(G: DynkinGraph) -> DynkinGraph:
    """Repeatedly delete the lowest-numbered degree-1 vertex."""
    while G.n >= 2:
        leaves = [v for v in range(G.n) if G.degree(v) == 1]
        if not leaves:
            break
        G = remove_vertex(G, leaves[0])
    return G


def all_graphs(n: int):
    """Every labelled simple graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield DynkinGraph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))
