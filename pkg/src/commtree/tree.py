"""Community trees, their leaf components, and persistence diagrams.

The tree has one node per (order, community) pair; the parent of an
order-k node is the unique order-(k-1) community that contains it. Each
leaf starts a component whose birth is the leaf order. When branches
join while walking toward the root, the component with the higher birth
survives and the others record the join order as their death (equal
births break deterministically). A component that is never eliminated
gets death 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .cliques import DEFAULT_CLIQUE_CAP
from .errors import InconsistentTreeError
from .graph import Graph
from .percolation import Community, CommunitySlice, all_communities

__all__ = [
    "TreeNode",
    "CommunityTree",
    "Component",
    "PersistenceDiagram",
    "build_tree",
    "community_tree",
    "components",
    "persistence_diagram",
    "export_tree",
]


@dataclass(frozen=True)
class TreeNode:
    id: int
    order: int
    community: Community


class CommunityTree:
    """Immutable tree over all communities of a graph.

    ``parent`` maps a node id to its parent id; the root (the order-1
    whole-graph community) has no entry. ``labels`` translate vertex ids
    back to external labels for exports.
    """

    def __init__(
        self,
        nodes: tuple[TreeNode, ...],
        parent: dict[int, int],
        root: int,
        labels: tuple[str, ...] | None = None,
    ):
        self.nodes = nodes
        self.parent = parent
        self.root = root
        self.labels = labels

    @cached_property
    def children(self) -> dict[int, tuple[int, ...]]:
        by_parent: dict[int, list[int]] = {}
        for child, parent in sorted(self.parent.items()):
            by_parent.setdefault(parent, []).append(child)
        return {p: tuple(cs) for p, cs in by_parent.items()}

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def leaves(self) -> tuple[int, ...]:
        return tuple(n.id for n in self.nodes if n.id not in self.children)

    def max_order(self) -> int:
        return max(n.order for n in self.nodes)

    def label_of(self, vertex: int) -> str:
        return self.labels[vertex] if self.labels is not None else str(vertex)


def build_tree(
    slices: list[CommunitySlice], labels: tuple[str, ...] | None = None
) -> CommunityTree:
    """Assemble the tree from the complete per-order slice list.

    Parents are located through clique membership: a member clique of an
    order-k community (or its (k-1)-vertex prefix when the member is
    exactly a k-clique) is a member of exactly one order-(k-1)
    community. Any other outcome means the slices are corrupt and raises
    InconsistentTreeError.
    """
    if not slices or slices[0].order != 1:
        raise InconsistentTreeError("slices must start at order 1")
    if len(slices[0]) != 1:
        raise InconsistentTreeError("order 1 must hold exactly one community")
    for i, s in enumerate(slices):
        if s.order != i + 1:
            raise InconsistentTreeError("slice orders must be contiguous from 1")

    nodes: list[TreeNode] = []
    ids_by_slice: list[list[int]] = []
    for s in slices:
        ids = []
        for community in s.communities:
            node = TreeNode(len(nodes), s.order, community)
            nodes.append(node)
            ids.append(node.id)
        ids_by_slice.append(ids)

    root = ids_by_slice[0][0]
    parent: dict[int, int] = {}
    for k_index in range(1, len(slices)):
        k = k_index + 1
        member_to_parent: dict[tuple, int] = {}
        for pid in ids_by_slice[k_index - 1]:
            for member in nodes[pid].community.members:
                member_to_parent[member] = pid
        for cid in ids_by_slice[k_index]:
            community = nodes[cid].community
            found: set[int] = set()
            for member in community.members:
                pid = member_to_parent.get(member)
                if pid is None:
                    pid = member_to_parent.get(member[: k - 1])
                if pid is None:
                    raise InconsistentTreeError(
                        f"no parent community found at order {k - 1}"
                    )
                found.add(pid)
            if len(found) != 1:
                raise InconsistentTreeError(
                    f"community at order {k} has {len(found)} parent candidates"
                )
            pid = found.pop()
            parent_comm = nodes[pid].community
            if not (
                community.vertex_set <= parent_comm.vertex_set
                and community.edge_set <= parent_comm.edge_set
            ):
                raise InconsistentTreeError(
                    f"containment violated between orders {k} and {k - 1}"
                )
            parent[cid] = pid
    return CommunityTree(tuple(nodes), parent, root, labels)


def community_tree(g: Graph, clique_cap: int = DEFAULT_CLIQUE_CAP) -> CommunityTree:
    """Convenience: slices plus tree in one call, labels attached."""
    return build_tree(all_communities(g, clique_cap), labels=g.labels)


@dataclass(frozen=True)
class Component:
    """A leaf-rooted chain of nested communities with its lifespan.

    ``chain`` lists node ids from the leaf (order = birth) down to the
    node where the component dies or, for the survivor, to the root.
    """

    leaf: int
    chain: tuple[int, ...]
    birth: int
    death: int

    @property
    def persistence(self) -> int:
        return self.birth - self.death


def _survivor_key(tree: CommunityTree, state: dict) -> tuple:
    community = tree.nodes[state["leaf"]].community
    vertices = tuple(sorted(community.vertex_set))
    return (min(vertices, default=-1), vertices, state["leaf"])


def components(tree: CommunityTree) -> list[Component]:
    """Split the tree into leaf components under the elder rule.

    At every join the component with the highest birth lives on; among
    equal births the one whose leaf community has the smallest minimum
    vertex id (then the lexicographically smallest vertex list) wins.
    The surviving component's death is set to 1.
    """
    states: list[dict] = []
    active: dict[int, int] = {}  # node id -> index into states
    for node in sorted(tree.nodes, key=lambda n: (-n.order, n.id)):
        kids = tree.children.get(node.id, ())
        if not kids:
            active[node.id] = len(states)
            states.append(
                {"leaf": node.id, "chain": [node.id], "birth": node.order, "death": None}
            )
            continue
        arriving = sorted({active[c] for c in kids})
        if len(arriving) == 1:
            winner = arriving[0]
        else:
            top_birth = max(states[i]["birth"] for i in arriving)
            tied = [i for i in arriving if states[i]["birth"] == top_birth]
            winner = min(tied, key=lambda i: _survivor_key(tree, states[i]))
            for i in arriving:
                if i != winner:
                    states[i]["death"] = node.order
                    states[i]["chain"].append(node.id)
        states[winner]["chain"].append(node.id)
        active[node.id] = winner
    result = [
        Component(
            leaf=s["leaf"],
            chain=tuple(s["chain"]),
            birth=s["birth"],
            death=1 if s["death"] is None else s["death"],
        )
        for s in states
    ]
    return sorted(result, key=lambda c: (-c.birth, c.death, c.leaf))


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of (death, birth) points; the diagonal is implicit.

    Points with birth == death sit on the diagonal but are still listed,
    one per tree leaf.
    """

    points: tuple[tuple[int, int], ...]

    @staticmethod
    def of(points: list[tuple[int, int]]) -> "PersistenceDiagram":
        return PersistenceDiagram(tuple(sorted(points)))

    def multiplicities(self) -> dict[tuple[int, int], int]:
        counts: dict[tuple[int, int], int] = {}
        for p in self.points:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def to_json(self) -> str:
        payload = {
            "points": [
                {"death": d, "birth": b, "mult": m}
                for (d, b), m in sorted(self.multiplicities().items())
            ]
        }
        return json.dumps(payload, indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "PersistenceDiagram":
        payload = json.loads(text)
        points: list[tuple[int, int]] = []
        for entry in payload["points"]:
            points.extend([(entry["death"], entry["birth"])] * entry.get("mult", 1))
        return PersistenceDiagram.of(points)


def persistence_diagram(comps: list[Component]) -> PersistenceDiagram:
    return PersistenceDiagram.of([(c.death, c.birth) for c in comps])


def diagram_of(g: Graph, clique_cap: int = DEFAULT_CLIQUE_CAP) -> PersistenceDiagram:
    """Persistence diagram of a graph's community tree."""
    return persistence_diagram(components(community_tree(g, clique_cap)))


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _node_names(tree: CommunityTree) -> dict[int, str]:
    names: dict[int, str] = {}
    used: set[str] = set()
    for node in tree.nodes:
        members = ",".join(sorted(tree.label_of(v) for v in node.community.vertex_set))
        name = f"k={node.order}|{{{members}}}"
        if name in used:
            name = f"{name}#{node.id}"
        used.add(name)
        names[node.id] = name
    return names


def export_tree(tree: CommunityTree, fmt: str = "json") -> str:
    """Serialize the tree as DOT (child -> parent edges) or JSON."""
    if fmt == "json":
        payload = {
            "root": tree.root,
            "nodes": [
                {
                    "id": node.id,
                    "order": node.order,
                    "size": len(node.community.vertex_set),
                    "vertices": sorted(
                        tree.label_of(v) for v in node.community.vertex_set
                    ),
                }
                for node in tree.nodes
            ],
            "edges": [[child, parent] for child, parent in sorted(tree.parent.items())],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "dot":
        names = _node_names(tree)
        lines = ["digraph community_tree {", "  node [shape=box];"]
        for node in tree.nodes:
            size = len(node.community.vertex_set)
            lines.append(
                f"  {_dot_quote(names[node.id])} [label=\"k={node.order} ({size})\"];"
            )
        for child, parent in sorted(tree.parent.items()):
            lines.append(f"  {_dot_quote(names[child])} -> {_dot_quote(names[parent])};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown tree export format {fmt!r}")
