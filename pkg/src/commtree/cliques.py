"""Clique enumeration: all maximal cliques and all cliques of a fixed size.

Maximal cliques come from pivoted recursive expansion with a
degeneracy-ordered outer loop, which behaves well on sparse real
networks. Isolated vertices are reported as 1-cliques so that order-1
constructions downstream see every vertex. Both enumerations are pure
functions of the immutable graph and return deterministically sorted
output.
"""

from __future__ import annotations

import heapq

from .errors import ResourceLimitError
from .graph import Graph

__all__ = [
    "Clique",
    "DEFAULT_CLIQUE_CAP",
    "degeneracy_order",
    "maximal_cliques",
    "k_cliques",
    "max_clique_order",
]

Clique = tuple[int, ...]

DEFAULT_CLIQUE_CAP = 10**6


def degeneracy_order(g: Graph) -> list[int]:
    """Vertices in degeneracy order (repeatedly peel a minimum-degree vertex).

    Ties break toward the smallest vertex id, so the order is deterministic.
    """
    n = g.vertex_count
    degree = [g.degree(v) for v in range(n)]
    heap = [(degree[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    order: list[int] = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue
        removed[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))
    return order


def maximal_cliques(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> list[Clique]:
    """Every maximal clique, sorted lexicographically by vertex tuple.

    Raises ResourceLimitError when more than ``cap`` cliques are found.
    """
    adj = g.adj_sets
    out: list[Clique] = []

    def expand(base: list[int], cand: set[int], done: set[int]) -> None:
        if not cand and not done:
            if len(out) >= cap:
                raise ResourceLimitError("maximal clique count", cap)
            out.append(tuple(sorted(base)))
            return
        pivot = max(sorted(cand | done), key=lambda u: len(cand & adj[u]))
        for v in sorted(cand - adj[pivot]):
            expand(base + [v], cand & adj[v], done & adj[v])
            cand = cand - {v}
            done = done | {v}

    order = degeneracy_order(g)
    rank = {v: i for i, v in enumerate(order)}
    for v in order:
        later = {u for u in g.adj[v] if rank[u] > rank[v]}
        earlier = {u for u in g.adj[v] if rank[u] < rank[v]}
        expand([v], later, earlier)
    return sorted(out)


def k_cliques(g: Graph, k: int, cap: int = DEFAULT_CLIQUE_CAP) -> list[Clique]:
    """Every clique on exactly ``k`` vertices, in lexicographic order."""
    if k < 1:
        raise ValueError(f"clique order must be at least 1, got {k}")
    if k == 1:
        return [(v,) for v in range(g.vertex_count)]
    adj = g.adj_sets
    out: list[Clique] = []

    def extend(base: list[int], cand: list[int]) -> None:
        if len(base) == k:
            if len(out) >= cap:
                raise ResourceLimitError(f"{k}-clique count", cap)
            out.append(tuple(base))
            return
        need = k - len(base)
        for i, v in enumerate(cand):
            if len(cand) - i < need:
                break
            extend(base + [v], [u for u in cand[i + 1 :] if u in adj[v]])

    for v in range(g.vertex_count):
        extend([v], [u for u in g.adj[v] if u > v])
    return out


def max_clique_order(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> int:
    """Size of the largest clique; 0 for the empty graph."""
    return max((len(c) for c in maximal_cliques(g, cap)), default=0)
