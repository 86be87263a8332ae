"""Exact bottleneck distance between persistence diagrams.

Births and deaths are integers, so every candidate distance is either an
integer (point to point) or a half-integer (point to diagonal). All
arithmetic runs on doubled coordinates, which makes every comparison an
integer comparison; results come back as Fraction values with
denominator 1 or 2. No floating point is involved anywhere.

Feasibility of a candidate value is a perfect-matching question on the
standard augmented bipartite graph: each diagram's points plus one
diagonal slot per point of the other diagram, where a point may match
its own diagonal projection and diagonal slots match each other freely.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .tree import CommunityTree, PersistenceDiagram, components, persistence_diagram

__all__ = [
    "Matching",
    "linf",
    "bottleneck_distance",
    "diagram_distance",
    "tree_distance",
]

Point = tuple[int, int]


@dataclass(frozen=True)
class Matching:
    """Witness bijection for the optimal bottleneck value.

    Each pair holds indices into the two diagrams' point tuples; None
    stands for the diagonal. ``cost2`` is the doubled bottleneck cost.
    """

    pairs: tuple[tuple[int | None, int | None], ...]
    cost2: int

    @property
    def cost(self) -> Fraction:
        return Fraction(self.cost2, 2)


def linf(p: Point, q: Point | None = None) -> Fraction:
    """L-infinity distance between two points, or to the diagonal if q is None.

    The nearest diagonal point of (d, b) is at distance (b - d) / 2.
    """
    if q is None:
        return Fraction(p[1] - p[0], 2)
    return Fraction(max(abs(p[0] - q[0]), abs(p[1] - q[1])))


def _linf2(p: Point, q: Point) -> int:
    return 2 * max(abs(p[0] - q[0]), abs(p[1] - q[1]))


def _diag2(p: Point) -> int:
    return p[1] - p[0]


def _hopcroft_karp(adjacency: list[list[int]], n_right: int) -> tuple[int, list[int]]:
    """Maximum bipartite matching size plus the left-side partner array."""
    n_left = len(adjacency)
    match_left = [-1] * n_left
    match_right = [-1] * n_right
    INF = n_left + n_right + 1
    distance = [INF] * n_left

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(n_left):
            if match_left[u] == -1:
                distance[u] = 0
                queue.append(u)
            else:
                distance[u] = INF
        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                w = match_right[v]
                if w == -1:
                    reachable_free = True
                elif distance[w] == INF:
                    distance[w] = distance[u] + 1
                    queue.append(w)
        return reachable_free

    def dfs(u: int) -> bool:
        for v in adjacency[u]:
            w = match_right[v]
            if w == -1 or (distance[w] == distance[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        distance[u] = INF
        return False

    size = 0
    while bfs():
        for u in range(n_left):
            if match_left[u] == -1 and dfs(u):
                size += 1
    return size, match_left


def _threshold_adjacency(
    p_points: list[Point], q_points: list[Point], threshold2: int
) -> list[list[int]]:
    """Augmented bipartite adjacency at a doubled threshold.

    Left side: the first diagram's points, then one diagonal slot per
    point of the second diagram. Right side: the second diagram's
    points, then one diagonal slot per point of the first.
    """
    m1, m2 = len(p_points), len(q_points)
    right_slots = list(range(m2, m2 + m1))
    adjacency: list[list[int]] = []
    for i, p in enumerate(p_points):
        row = [j for j, q in enumerate(q_points) if _linf2(p, q) <= threshold2]
        if _diag2(p) <= threshold2:
            row.append(m2 + i)
        adjacency.append(row)
    for j, q in enumerate(q_points):
        row = [j] if _diag2(q) <= threshold2 else []
        row.extend(right_slots)
        adjacency.append(row)
    return adjacency


def bottleneck_distance(
    pd1: PersistenceDiagram, pd2: PersistenceDiagram
) -> tuple[Fraction, Matching]:
    """Exact bottleneck distance and a witness matching.

    Candidate values are all pairwise distances plus all diagonal gaps;
    feasibility is monotone in the threshold, so a binary search over
    the sorted candidates finds the optimum.
    """
    p_points = list(pd1.points)
    q_points = list(pd2.points)
    m1, m2 = len(p_points), len(q_points)
    if m1 == 0 and m2 == 0:
        return Fraction(0), Matching((), 0)

    candidates = {0}
    candidates.update(_linf2(p, q) for p in p_points for q in q_points)
    candidates.update(_diag2(p) for p in p_points)
    candidates.update(_diag2(q) for q in q_points)
    ordered = sorted(candidates)

    total = m1 + m2

    def feasible(threshold2: int) -> tuple[bool, list[int]]:
        adjacency = _threshold_adjacency(p_points, q_points, threshold2)
        size, match_left = _hopcroft_karp(adjacency, total)
        return size == total, match_left

    lo, hi = 0, len(ordered) - 1
    ok, match_left = feasible(ordered[hi])
    assert ok, "matching everything to the diagonal must be feasible"
    while lo < hi:
        mid = (lo + hi) // 2
        ok, candidate_match = feasible(ordered[mid])
        if ok:
            hi = mid
            match_left = candidate_match
        else:
            lo = mid + 1
    best2 = ordered[hi]

    pairs: list[tuple[int | None, int | None]] = []
    for u, v in enumerate(match_left):
        if u < m1:
            pairs.append((u, v) if v < m2 else (u, None))
        elif v < m2:
            pairs.append((None, v))
    return Fraction(best2, 2), Matching(tuple(pairs), best2)


def diagram_distance(pd1: PersistenceDiagram, pd2: PersistenceDiagram) -> Fraction:
    return bottleneck_distance(pd1, pd2)[0]


def tree_distance(t1: CommunityTree, t2: CommunityTree) -> Fraction:
    """Bottleneck distance between two trees' persistence diagrams."""
    pd1 = persistence_diagram(components(t1))
    pd2 = persistence_diagram(components(t2))
    return diagram_distance(pd1, pd2)
