"""Clique-percolation communities at one order or across all orders.

A community of order k is the union of k-cliques that are chained
together by overlaps of k-1 vertices. Two routes compute the same
result: the direct route enumerates every k-clique and joins pairs
sharing k-1 vertices, and the fast route clusters maximal cliques of
size >= k by overlap >= k-1. The fast route computes clique overlaps
once and reuses them for every order. The test suite enforces that both
routes agree; neither is trusted on faith.

The order-1 community is always the whole graph, even when the graph is
disconnected.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .cliques import DEFAULT_CLIQUE_CAP, Clique, k_cliques, maximal_cliques
from .graph import Graph
from .union_find import UnionFind

__all__ = [
    "Community",
    "CommunitySlice",
    "k_communities",
    "k_communities_oracle",
    "all_communities",
]


@dataclass(frozen=True)
class Community:
    """A union of cliques, identified by its constituent clique set.

    ``members`` holds k-cliques on the direct route and maximal cliques
    of size >= k on the fast route; the derived vertex and edge unions
    are route-independent.
    """

    order: int
    members: tuple[Clique, ...]
    vertex_set: frozenset[int]
    edge_set: frozenset[tuple[int, int]]

    @staticmethod
    def from_members(order: int, cliques: Iterable[Clique]) -> "Community":
        members = tuple(sorted(cliques))
        vertices = frozenset(v for c in members for v in c)
        edges = frozenset(e for c in members for e in combinations(c, 2))
        return Community(order, members, vertices, edges)

    @property
    def sort_key(self) -> tuple:
        vertices = tuple(sorted(self.vertex_set))
        return (min(vertices, default=-1), len(vertices), vertices, self.members)


@dataclass(frozen=True)
class CommunitySlice:
    """All communities of one order, deterministically sorted."""

    order: int
    communities: tuple[Community, ...]

    def __len__(self) -> int:
        return len(self.communities)


def _pair_overlaps(cliques: Sequence[Clique]) -> dict[tuple[int, int], int]:
    """Number of shared vertices for every clique pair that shares any."""
    membership: dict[int, list[int]] = defaultdict(list)
    for i, clique in enumerate(cliques):
        for v in clique:
            membership[v].append(i)
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for indices in membership.values():
        for pair in combinations(indices, 2):
            counts[pair] += 1
    return counts


def _group_communities(
    order: int, cliques: Sequence[Clique], min_overlap: int
) -> tuple[Community, ...]:
    uf = UnionFind(len(cliques))
    for (i, j), shared in _pair_overlaps(cliques).items():
        if shared >= min_overlap:
            uf.union(i, j)
    groups = [[cliques[i] for i in grp] for grp in uf.groups()]
    communities = [Community.from_members(order, grp) for grp in groups]
    return tuple(sorted(communities, key=lambda c: c.sort_key))


def k_communities_oracle(
    g: Graph, k: int, cap: int = DEFAULT_CLIQUE_CAP
) -> CommunitySlice:
    """Direct-definition route: enumerate every k-clique, join on k-1 overlap.

    Exponential in the worst case; intended for small graphs and as the
    reference the fast route is checked against.
    """
    if k < 2:
        raise ValueError(f"community order must be at least 2, got {k}")
    cliques = k_cliques(g, k, cap)
    return CommunitySlice(k, _group_communities(k, cliques, k - 1))


def k_communities(g: Graph, k: int, maximal: Sequence[Clique]) -> CommunitySlice:
    """Fast route: cluster the given maximal cliques of size >= k.

    ``maximal`` must be the full maximal-clique list of ``g``.
    """
    if k < 2:
        raise ValueError(f"community order must be at least 2, got {k}")
    kept = [c for c in maximal if len(c) >= k]
    return CommunitySlice(k, _group_communities(k, kept, k - 1))


def all_communities(g: Graph, clique_cap: int = DEFAULT_CLIQUE_CAP) -> list[CommunitySlice]:
    """Community slices for every order from 1 to the largest clique size.

    Maximal cliques and their pairwise overlaps are computed once and
    thresholded per order. The order-1 slice always holds exactly one
    community: the whole graph.
    """
    maximal = maximal_cliques(g, clique_cap)
    slices = [CommunitySlice(1, (Community.from_members(1, maximal),))]
    overlaps = _pair_overlaps(maximal)
    sizes = [len(c) for c in maximal]
    top = max(sizes, default=0)
    for k in range(2, top + 1):
        kept = [i for i, s in enumerate(sizes) if s >= k]
        uf = UnionFind(len(maximal))
        for (i, j), shared in overlaps.items():
            if shared >= k - 1 and sizes[i] >= k and sizes[j] >= k:
                uf.union(i, j)
        by_root: dict[int, list[Clique]] = defaultdict(list)
        for i in kept:
            by_root[uf.find(i)].append(maximal[i])
        communities = [Community.from_members(k, grp) for grp in by_root.values()]
        slices.append(
            CommunitySlice(k, tuple(sorted(communities, key=lambda c: c.sort_key)))
        )
    return slices
