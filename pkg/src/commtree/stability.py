"""Star numbers: vertex-cover bounds on how far two community trees can drift.

The removal star number of a graph pair is the minimum number of
vertices touching every removed edge; the addition star number covers
the added edges; their sum upper-bounds the bottleneck distance between
the two community trees. Each star number is exactly the minimum vertex
cover of the corresponding delta graph, which is NP-complete, so the
solver is an exact branch-and-bound that degrades to a certified
[lower, upper] interval when its node budget runs out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .bottleneck import tree_distance
from .cliques import DEFAULT_CLIQUE_CAP
from .graph import Graph, build_graph, graph_delta
from .tree import community_tree

__all__ = [
    "CoverCertificate",
    "CoverBound",
    "StarNumbers",
    "StabilityReport",
    "DEFAULT_NODE_BUDGET",
    "matching_lower_bound",
    "min_vertex_cover",
    "rsn",
    "asn",
    "tsn",
    "verify_stability",
]

DEFAULT_NODE_BUDGET = 10**6


@dataclass(frozen=True)
class CoverCertificate:
    """A concrete vertex set that covers the instance's edges."""

    vertices: frozenset[str]
    covered_edge_count: int


@dataclass(frozen=True)
class CoverBound:
    """Exact cover size when lower == upper, otherwise a certified interval.

    ``certificate`` always holds a valid cover of size ``upper``.
    """

    lower: int
    upper: int
    certificate: CoverCertificate
    nodes_explored: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def size(self) -> int:
        if not self.exact:
            raise ValueError("cover size is only an interval; budget was exhausted")
        return self.upper

    def json_value(self) -> int | list[int]:
        return self.upper if self.exact else [self.lower, self.upper]


def _greedy_matching(adjacency: dict[int, set[int]]) -> list[tuple[int, int]]:
    """Deterministic maximal matching; its size lower-bounds any vertex cover."""
    used: set[int] = set()
    matching: list[tuple[int, int]] = []
    for u in sorted(adjacency):
        if u in used:
            continue
        for v in sorted(adjacency[u]):
            if v not in used:
                used.add(u)
                used.add(v)
                matching.append((u, v))
                break
    return matching


def matching_lower_bound(g: Graph) -> int:
    """Greedy maximal matching size of a graph (a vertex cover lower bound)."""
    adjacency = {v: set(g.adj[v]) for v in range(g.vertex_count) if g.degree(v)}
    return len(_greedy_matching(adjacency))


def _drop_vertex(adjacency: dict[int, set[int]], v: int) -> None:
    for u in adjacency.pop(v, ()):  # type: ignore[arg-type]
        nbrs = adjacency.get(u)
        if nbrs is not None:
            nbrs.discard(v)
            if not nbrs:
                del adjacency[u]


def min_vertex_cover(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> CoverBound:
    """Minimum vertex cover by branch and bound.

    Branches on a maximum-degree vertex (in the cover, or all its
    neighbours are), after degree-0/1 reductions. Pruning uses a greedy
    maximal-matching lower bound; the incumbent starts from the
    2-approximation that takes both endpoints of that matching. When the
    node budget is exhausted the result is the interval [root matching
    bound, incumbent size] with the incumbent as certificate.
    """
    edges = list(g.edges())
    adjacency0 = {v: set(g.adj[v]) for v in range(g.vertex_count) if g.degree(v)}
    root_matching = _greedy_matching(adjacency0)
    root_lb = len(root_matching)

    best_cover: set[int] = {v for pair in root_matching for v in pair}
    best = len(best_cover)
    visited = 0
    exhausted = False

    def solve(adjacency: dict[int, set[int]], chosen: set[int]) -> None:
        nonlocal best, best_cover, visited, exhausted
        if exhausted:
            return
        visited += 1
        if visited > node_budget:
            exhausted = True
            return
        # degree-0/1 reductions
        changed = True
        while changed:
            changed = False
            for v in sorted(adjacency):
                nbrs = adjacency.get(v)
                if nbrs is None:
                    continue
                if not nbrs:
                    del adjacency[v]
                    changed = True
                elif len(nbrs) == 1:
                    w = next(iter(nbrs))
                    chosen.add(w)
                    _drop_vertex(adjacency, w)
                    changed = True
        if len(chosen) >= best:
            return
        if not adjacency:
            best = len(chosen)
            best_cover = set(chosen)
            return
        if len(chosen) + len(_greedy_matching(adjacency)) >= best:
            return
        v = max(sorted(adjacency), key=lambda u: len(adjacency[u]))
        # branch: v in the cover
        branch = {u: set(nbrs) for u, nbrs in adjacency.items()}
        _drop_vertex(branch, v)
        solve(branch, chosen | {v})
        # branch: v excluded, so every neighbour is in the cover
        neighbours = sorted(adjacency[v])
        branch = {u: set(nbrs) for u, nbrs in adjacency.items()}
        for u in neighbours:
            _drop_vertex(branch, u)
        solve(branch, chosen | set(neighbours))

    if edges:
        solve({v: set(nbrs) for v, nbrs in adjacency0.items()}, set())
    lower = root_lb if exhausted else best
    labels = frozenset(g.labels[v] for v in best_cover)
    covered = sum(1 for u, v in edges if u in best_cover or v in best_cover)
    return CoverBound(lower, best, CoverCertificate(labels, covered), visited)


def _cover_of_label_edges(
    edges: list[tuple[str, str]], node_budget: int
) -> CoverBound:
    return min_vertex_cover(build_graph(edges), node_budget)


def rsn(g: Graph, g_prime: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> CoverBound:
    """Minimum vertices touching every edge of ``g`` missing from ``g_prime``."""
    delta = graph_delta(g, g_prime)
    return _cover_of_label_edges(delta.removed_label_edges(), node_budget)


def asn(g: Graph, g_prime: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> CoverBound:
    """Minimum vertices touching every edge of ``g_prime`` missing from ``g``.

    Equal to rsn with the two graphs swapped.
    """
    delta = graph_delta(g, g_prime)
    return _cover_of_label_edges(delta.added_label_edges(), node_budget)


@dataclass(frozen=True)
class StarNumbers:
    """Removal and addition star numbers of a graph pair, plus their sum."""

    rsn: CoverBound
    asn: CoverBound

    @property
    def tsn_lower(self) -> int:
        return self.rsn.lower + self.asn.lower

    @property
    def tsn_upper(self) -> int:
        return self.rsn.upper + self.asn.upper

    @property
    def exact(self) -> bool:
        return self.rsn.exact and self.asn.exact

    @property
    def tsn(self) -> int:
        if not self.exact:
            raise ValueError("tsn is only an interval; budget was exhausted")
        return self.tsn_upper

    def json_dict(self) -> dict:
        tsn_value = (
            self.tsn_upper if self.exact else [self.tsn_lower, self.tsn_upper]
        )
        return {
            "rsn": self.rsn.json_value(),
            "asn": self.asn.json_value(),
            "tsn": tsn_value,
            "exact": self.exact,
        }


def tsn(g: Graph, g_prime: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> StarNumbers:
    """Both star numbers of the pair; their sum bounds the tree distance."""
    return StarNumbers(
        rsn=rsn(g, g_prime, node_budget), asn=asn(g, g_prime, node_budget)
    )


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of checking the tree-distance bound on one graph pair."""

    distance: Fraction
    stars: StarNumbers

    @property
    def holds(self) -> bool:
        return self.distance <= self.stars.tsn_upper

    @property
    def slack(self) -> Fraction:
        return Fraction(self.stars.tsn_upper) - self.distance

    def json_dict(self) -> dict:
        payload = self.stars.json_dict()
        payload["d_bottleneck"] = float(self.distance)
        payload["holds"] = self.holds
        payload["slack"] = float(self.slack)
        return payload

    def to_json(self) -> str:
        return json.dumps(self.json_dict(), indent=2) + "\n"


def verify_stability(
    g: Graph,
    g_prime: Graph,
    clique_cap: int = DEFAULT_CLIQUE_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> StabilityReport:
    """Compute both trees, their bottleneck distance, and the star-number bound."""
    distance = tree_distance(
        community_tree(g, clique_cap), community_tree(g_prime, clique_cap)
    )
    return StabilityReport(distance=distance, stars=tsn(g, g_prime, node_budget))
