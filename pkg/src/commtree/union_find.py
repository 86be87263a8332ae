"""Disjoint-set forest over dense integer indices."""

from __future__ import annotations


class UnionFind:
    """Union-find with path halving and union by size.

    >>> uf = UnionFind(5)
    >>> uf.union(0, 1)
    >>> uf.union(3, 4)
    >>> uf.find(1) == uf.find(0)
    True
    >>> uf.find(2) == uf.find(4)
    False
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]

    def groups(self) -> list[list[int]]:
        """Members of each set, grouped by root, in index order."""
        by_root: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            by_root.setdefault(self.find(x), []).append(x)
        return [by_root[r] for r in sorted(by_root)]
