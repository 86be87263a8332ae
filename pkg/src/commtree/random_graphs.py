"""Seeded random graphs and perturbations for harness commands and tests.

Everything takes an explicit random.Random instance; given the same
seed the outputs are identical across runs.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, build_graph

__all__ = ["gnp_graph", "gnm_graph", "perturb_near_vertices"]


def gnp_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) with vertex labels "0" .. "n-1"."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    labels = [str(i) for i in range(n)]
    edges = [
        (labels[u], labels[v])
        for u, v in combinations(range(n), 2)
        if rng.random() < p
    ]
    return build_graph(edges, extra_vertices=labels)


def gnm_graph(n: int, m: int, rng: random.Random) -> Graph:
    """Uniform random graph with exactly ``m`` edges."""
    pairs = list(combinations(range(n), 2))
    if m > len(pairs):
        raise ValueError(f"cannot place {m} edges on {n} vertices")
    labels = [str(i) for i in range(n)]
    edges = [(labels[u], labels[v]) for u, v in rng.sample(pairs, m)]
    return build_graph(edges, extra_vertices=labels)


def perturb_near_vertices(
    g: Graph,
    rng: random.Random,
    max_centers: int = 3,
    max_flips: int = 6,
) -> Graph:
    """Toggle a few edges, all incident to at most ``max_centers`` vertices.

    Every changed edge touches one of the chosen centers, so both star
    numbers of (g, result) are at most ``max_centers``.
    """
    n = g.vertex_count
    if n < 2:
        return g
    centers = rng.sample(range(n), min(n, rng.randint(1, max_centers)))
    edge_set = set(g.edges())
    for _ in range(rng.randint(1, max_flips)):
        x = rng.choice(centers)
        y = rng.randrange(n)
        if y == x:
            continue
        edge = (x, y) if x < y else (y, x)
        if edge in edge_set:
            edge_set.remove(edge)
        else:
            edge_set.add(edge)
    edges = [(g.labels[u], g.labels[v]) for u, v in sorted(edge_set)]
    return build_graph(edges, extra_vertices=g.labels)
