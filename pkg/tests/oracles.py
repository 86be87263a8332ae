"""Brute-force reference implementations used only by the tests.

These stay deliberately naive: subset enumeration, exhaustive bijections,
ascending-size cover search. They are the ground truth the fast
implementations are measured against and must not share code with them.
"""

from fractions import Fraction
from itertools import combinations, permutations


def cliques_by_subsets(g, max_size):
    """All cliques up to max_size, via per-vertex neighbourhood subsets."""
    adj = g.adj_sets
    found = []
    for v in range(g.vertex_count):
        found.append((v,))
        higher = [u for u in g.adj[v] if u > v]
        for size in range(1, max_size):
            for extra in combinations(higher, size):
                if all(b in adj[a] for a, b in combinations(extra, 2)):
                    found.append((v,) + extra)
    return found


def maximal_cliques_by_subsets(g, max_size):
    """Maximal cliques up to max_size; a clique is maximal when no outside
    vertex is adjacent to all of it."""
    adj = g.adj_sets
    maximal = []
    for clique in cliques_by_subsets(g, max_size):
        members = set(clique)
        common = set(range(g.vertex_count)) - members
        for v in clique:
            common &= adj[v]
        if not common:
            maximal.append(clique)
    return sorted(maximal)


def k_cliques_by_combinations(g, k):
    """Every k-subset of vertices tested for pairwise adjacency."""
    adj = g.adj_sets
    out = []
    for subset in combinations(range(g.vertex_count), k):
        if all(b in adj[a] for a, b in combinations(subset, 2)):
            out.append(subset)
    return out


def bottleneck_by_enumeration(pd1, pd2):
    """Exhaustive search over all bijections, diagonal assignments included."""

    def diag(p):
        return Fraction(p[1] - p[0], 2)

    def dist(p, q):
        return Fraction(max(abs(p[0] - q[0]), abs(p[1] - q[1])))

    ps, qs = list(pd1.points), list(pd2.points)
    best = None
    for k in range(min(len(ps), len(qs)) + 1):
        for chosen_p in combinations(range(len(ps)), k):
            rest_p = [i for i in range(len(ps)) if i not in chosen_p]
            for chosen_q in permutations(range(len(qs)), k):
                rest_q = [j for j in range(len(qs)) if j not in chosen_q]
                cost = Fraction(0)
                for i, j in zip(chosen_p, chosen_q):
                    cost = max(cost, dist(ps[i], qs[j]))
                for i in rest_p:
                    cost = max(cost, diag(ps[i]))
                for j in rest_q:
                    cost = max(cost, diag(qs[j]))
                if best is None or cost < best:
                    best = cost
    return best if best is not None else Fraction(0)


def min_cover_by_subsets(g):
    """Smallest vertex cover size by trying subsets in increasing size."""
    edges = list(g.edges())
    if not edges:
        return 0
    n = g.vertex_count
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return size
    return n
