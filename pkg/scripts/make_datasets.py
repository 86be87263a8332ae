"""Regenerate the files under data/.

karate.txt is the real Zachary karate club network, exported from the
copy that ships with networkx (34 vertices, 78 edges, classic 1..34
numbering). dolphins.gml and zebra.txt are seeded uniform random graphs
with the vertex and edge counts of the well-known dolphin social
network (62 / 159) and zebra interaction network (27 / 111); the
originals are not redistributable from this environment, so these
stand-ins exercise the same formats and scales. Replace them with the
real files if you have them; every command works the same way.

Usage: python scripts/make_datasets.py
"""

from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path

import networkx as nx

DATA = Path(__file__).resolve().parent.parent / "data"


def write_karate() -> None:
    g = nx.karate_club_graph()
    lines = ["# Zachary karate club (34 vertices, 78 edges), 1-based ids"]
    lines += sorted(f"{u + 1} {v + 1}" for u, v in g.edges())
    (DATA / "karate.txt").write_text("\n".join(lines) + "\n")


def random_edges(n: int, m: int, seed: int) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    return sorted(rng.sample(list(combinations(range(n), 2)), m))


def write_dolphins() -> None:
    edges = random_edges(62, 159, seed=62159)
    lines = ["graph", "["]
    for i in range(62):
        lines += ["  node", "  [", f"    id {i}", "  ]"]
    for u, v in edges:
        lines += ["  edge", "  [", f"    source {u}", f"    target {v}", "  ]"]
    lines.append("]")
    (DATA / "dolphins.gml").write_text("\n".join(lines) + "\n")


def write_zebra() -> None:
    edges = random_edges(27, 111, seed=27111)
    lines = ["% zebra-style interaction network (27 vertices, 111 edges)"]
    lines += [f"{u + 1} {v + 1}" for u, v in edges]
    (DATA / "zebra.txt").write_text("\n".join(lines) + "\n")


def write_fig_analog() -> None:
    k5 = combinations("abcde", 2)
    k4 = combinations("defg", 2)
    seen = set()
    lines = ["# two overlapping complete blocks: K5 on a..e, K4 on d..g"]
    for a, b in list(k5) + list(k4):
        if (a, b) not in seen:
            seen.add((a, b))
            lines.append(f"{a} {b}")
    (DATA / "fig_analog.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    DATA.mkdir(exist_ok=True)
    write_karate()
    write_dolphins()
    write_zebra()
    write_fig_analog()
    print("wrote", sorted(p.name for p in DATA.iterdir()))
