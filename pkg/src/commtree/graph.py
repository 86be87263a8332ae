"""Immutable undirected simple graphs with label interning and file loaders.

Vertices carry external string labels, interned to dense integer ids in
first-seen order. All algorithms in this package operate on the integer
ids; labels only matter at the I/O boundary. Graphs are never mutated
after construction, so they are safe to share between concurrent readers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator

from .errors import ParseError, SelfLoopError, UnknownEndpointError, UnknownVertexError

__all__ = [
    "Graph",
    "GraphDelta",
    "build_graph",
    "load_edge_list",
    "load_gml",
    "load_graph",
    "graph_delta",
    "remove_vertex",
    "graph_to_json",
    "dump_edge_list",
]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``labels[i]`` is the external label of vertex id ``i`` and ``adj[i]``
    is the sorted tuple of its neighbour ids. Self-loops and parallel
    edges cannot be represented.
    """

    labels: tuple[str, ...]
    adj: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    @cached_property
    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adj)

    def id_of(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise UnknownVertexError(label) from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as an id pair (u, v) with u < v."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def edge_labels(self) -> Iterator[tuple[str, str]]:
        for u, v in self.edges():
            yield (self.labels[u], self.labels[v])


def _intern(label: str, index: dict[str, int], labels: list[str]) -> int:
    if not isinstance(label, str) or not label:
        raise ValueError(f"vertex label must be a non-empty string, got {label!r}")
    vid = index.get(label)
    if vid is None:
        vid = len(labels)
        index[label] = vid
        labels.append(label)
    return vid


def build_graph(
    edges: Iterable[tuple[str, str]],
    extra_vertices: Iterable[str] = (),
) -> Graph:
    """Build a canonical graph from labelled edges.

    Duplicate edges and reversed duplicates collapse to a single edge.
    ``extra_vertices`` adds vertices that may not appear in any edge.
    Raises SelfLoopError on an edge from a label to itself.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    edge_ids: set[tuple[int, int]] = set()
    for a, b in edges:
        u = _intern(a, index, labels)
        v = _intern(b, index, labels)
        if u == v:
            raise SelfLoopError(a)
        edge_ids.add((u, v) if u < v else (v, u))
    for label in extra_vertices:
        _intern(label, index, labels)
    neighbours: list[list[int]] = [[] for _ in labels]
    for u, v in edge_ids:
        neighbours[u].append(v)
        neighbours[v].append(u)
    return Graph(tuple(labels), tuple(tuple(sorted(ns)) for ns in neighbours))


def load_edge_list(text: str) -> Graph:
    """Parse whitespace-separated label pairs, one edge per line.

    Blank lines and lines starting with '#' or '%' are ignored.
    """
    edges: list[tuple[str, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_no, f"expected two labels, got {len(parts)} tokens")
        if parts[0] == parts[1]:
            raise ParseError(line_no, f"self-loop at vertex {parts[0]!r}")
        edges.append((parts[0], parts[1]))
    return build_graph(edges)


def dump_edge_list(g: Graph) -> str:
    """Serialize the edges as sorted label pairs, one per line.

    Isolated vertices are not representable in this format.
    """
    lines = sorted(
        "{} {}".format(*sorted((a, b))) for a, b in g.edge_labels()
    )
    return "\n".join(lines) + ("\n" if lines else "")


def graph_to_json(g: Graph) -> str:
    """Canonical JSON dump: sorted vertex labels and sorted label edges."""
    payload = {
        "vertices": sorted(g.labels),
        "edges": sorted(sorted((a, b)) for a, b in g.edge_labels()),
    }
    return json.dumps(payload, indent=2) + "\n"


# --- GML subset parser ------------------------------------------------------
#
# Supports:  graph [ node [ id N ] ... edge [ source A target B ] ... ]
# Unknown keys and nested blocks are skipped; node ids become labels.

_GmlToken = tuple[str, str, int]  # kind ('[' / ']' / 'word' / 'str'), text, line


def _gml_tokens(text: str) -> list[_GmlToken]:
    tokens: list[_GmlToken] = []
    line = 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
        elif c.isspace():
            i += 1
        elif c == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif c in "[]":
            tokens.append((c, c, line))
            i += 1
        elif c == '"':
            j = text.find('"', i + 1)
            if j < 0:
                raise ParseError(line, "unterminated string")
            tokens.append(("str", text[i + 1 : j], line))
            line += text.count("\n", i, j)
            i = j + 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in '[]"':
                j += 1
            tokens.append(("word", text[i:j], line))
            i = j
    return tokens


def _parse_gml_block(tokens: list[_GmlToken], pos: int) -> tuple[list[tuple[str, object, int]], int]:
    """Parse key/value pairs until ']' or end; returns (entries, next_pos)."""
    entries: list[tuple[str, object, int]] = []
    while pos < len(tokens):
        kind, text, line = tokens[pos]
        if kind == "]":
            return entries, pos + 1
        if kind != "word":
            raise ParseError(line, f"expected a key, got {text!r}")
        pos += 1
        if pos >= len(tokens):
            raise ParseError(line, f"key {text!r} has no value")
        vkind, vtext, vline = tokens[pos]
        if vkind == "[":
            inner, pos = _parse_gml_block(tokens, pos + 1)
            entries.append((text, inner, line))
        elif vkind in ("word", "str"):
            entries.append((text, vtext, line))
            pos += 1
        else:
            raise ParseError(vline, f"unexpected {vtext!r} after key {text!r}")
    return entries, pos


def _gml_int(value: object, line: int, key: str) -> int:
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            pass
    raise ParseError(line, f"{key} must be an integer, got {value!r}")


def load_gml(text: str) -> Graph:
    """Parse the GML subset used by common network datasets."""
    entries, _ = _parse_gml_block(_gml_tokens(text), 0)
    graph_block = None
    for key, value, line in entries:
        if key == "graph":
            if not isinstance(value, list):
                raise ParseError(line, "graph must open a [ ... ] block")
            graph_block = value
            break
    if graph_block is None:
        raise ParseError(1, "no graph [ ... ] block found")

    node_labels: list[str] = []
    declared: set[str] = set()
    edges: list[tuple[str, str]] = []
    for key, value, line in graph_block:
        if key == "node":
            if not isinstance(value, list):
                raise ParseError(line, "node must open a [ ... ] block")
            ids = [(v, ln) for k, v, ln in value if k == "id"]
            if not ids:
                raise ParseError(line, "node block has no id")
            label = str(_gml_int(ids[0][0], ids[0][1], "node id"))
            if label in declared:
                raise ParseError(line, f"duplicate node id {label}")
            declared.add(label)
            node_labels.append(label)
        elif key == "edge":
            if not isinstance(value, list):
                raise ParseError(line, "edge must open a [ ... ] block")
            fields = {k: (v, ln) for k, v, ln in value if k in ("source", "target")}
            if "source" not in fields or "target" not in fields:
                raise ParseError(line, "edge block needs source and target")
            src = str(_gml_int(*fields["source"], "source"))
            dst = str(_gml_int(*fields["target"], "target"))
            for endpoint in (src, dst):
                if endpoint not in declared:
                    raise UnknownEndpointError(line, endpoint)
            if src == dst:
                raise ParseError(line, f"self-loop at node {src}")
            edges.append((src, dst))
    return build_graph(edges, extra_vertices=node_labels)


def load_graph(path: str | Path, fmt: str = "auto") -> Graph:
    """Load a graph file; fmt is 'edgelist', 'gml', or 'auto' (by extension)."""
    path = Path(path)
    if fmt == "auto":
        fmt = "gml" if path.suffix.lower() == ".gml" else "edgelist"
    text = path.read_text(encoding="utf-8")
    if fmt == "gml":
        return load_gml(text)
    if fmt == "edgelist":
        return load_edge_list(text)
    raise ValueError(f"unknown input format {fmt!r}")


@dataclass(frozen=True)
class GraphDelta:
    """Edge difference of two graphs over their unified label space.

    ``labels`` lists the union of both vertex sets; edge endpoints below
    are ids into that list. ``removed_edges`` are present in the first
    graph only, ``added_edges`` in the second only.
    """

    labels: tuple[str, ...]
    removed_edges: frozenset[tuple[int, int]]
    added_edges: frozenset[tuple[int, int]]

    @property
    def is_empty(self) -> bool:
        return not self.removed_edges and not self.added_edges

    def removed_label_edges(self) -> list[tuple[str, str]]:
        return sorted((self.labels[u], self.labels[v]) for u, v in self.removed_edges)

    def added_label_edges(self) -> list[tuple[str, str]]:
        return sorted((self.labels[u], self.labels[v]) for u, v in self.added_edges)


def graph_delta(g: Graph, g_prime: Graph) -> GraphDelta:
    """Edges removed and added when going from ``g`` to ``g_prime``."""
    labels = list(g.labels) + [lab for lab in g_prime.labels if lab not in g.index]
    index = {lab: i for i, lab in enumerate(labels)}

    def edge_ids(graph: Graph) -> set[tuple[int, int]]:
        ids = set()
        for a, b in graph.edge_labels():
            u, v = index[a], index[b]
            ids.add((u, v) if u < v else (v, u))
        return ids

    old_edges = edge_ids(g)
    new_edges = edge_ids(g_prime)
    return GraphDelta(
        tuple(labels),
        frozenset(old_edges - new_edges),
        frozenset(new_edges - old_edges),
    )


def remove_vertex(g: Graph, label: str) -> Graph:
    """Induced subgraph with one vertex (and its incident edges) removed."""
    vid = g.id_of(label)
    keep = [lab for i, lab in enumerate(g.labels) if i != vid]
    edges = [
        (g.labels[u], g.labels[v]) for u, v in g.edges() if u != vid and v != vid
    ]
    return build_graph(edges, extra_vertices=keep)
