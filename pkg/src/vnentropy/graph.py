"""Immutable undirected simple graphs and their local structure statistics.

Node labels are opaque strings mapped internally to dense indices
``0..N-1``; every public result is reported in terms of the original
labels. Graphs never change after construction: removals return copies,
so a dismantling loop can keep scoring candidates against the
pre-removal graph.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Mapping

from .errors import EdgeListParseError, SelfLoopError, UnknownNodeError

__all__ = [
    "Graph",
    "ComponentPartition",
    "label_sort_key",
    "load_edge_list",
    "write_edge_list",
    "remove_nodes",
    "connected_components",
    "giant_component_fraction",
    "local_clustering",
    "average_clustering",
    "ball_boundary",
    "degree_distribution_entropy",
]


def label_sort_key(label: str):
    """Ordering key for node labels: numeric strings sort numerically,
    everything else lexicographically after them."""
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


class Graph:
    """Undirected simple graph: no self-loops, no duplicate edges.

    ``labels`` preserves first-appearance order; ``adjacency`` holds
    sorted neighbor indices per node and ``degrees`` the matching
    neighbor counts.
    """

    __slots__ = ("_labels", "_index", "_adj", "_degrees", "_edge_count", "_adj_sets")

    def __init__(self, edges: Iterable[tuple[str, str]] = (), nodes: Iterable[str] = ()):
        index: dict[str, int] = {}
        neighbor_sets: list[set[int]] = []

        def intern(label: str) -> int:
            i = index.get(label)
            if i is None:
                i = len(neighbor_sets)
                index[label] = i
                neighbor_sets.append(set())
            return i

        for label in nodes:
            intern(str(label))
        for a, b in edges:
            a, b = str(a), str(b)
            if a == b:
                raise SelfLoopError(a)
            ia, ib = intern(a), intern(b)
            neighbor_sets[ia].add(ib)
            neighbor_sets[ib].add(ia)

        self._labels = tuple(index)
        self._index = index
        self._adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
        self._degrees = tuple(len(s) for s in neighbor_sets)
        self._edge_count = sum(self._degrees) // 2
        self._adj_sets: tuple[frozenset[int], ...] | None = None

    # -- basic accessors ------------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor indices per node index."""
        return self._adj

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def node_count(self) -> int:
        return len(self._labels)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def has_node(self, label: str) -> bool:
        return label in self._index

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNodeError(label) from None

    def degree(self, label: str) -> int:
        return self._degrees[self.index_of(label)]

    def neighbors(self, label: str) -> tuple[str, ...]:
        return tuple(self._labels[i] for i in self._adj[self.index_of(label)])

    def has_edge(self, a: str, b: str) -> bool:
        ia, ib = self.index_of(a), self.index_of(b)
        return ib in self.neighbor_sets[ia]

    @property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        """Neighbor indices as frozensets, built on first use."""
        if self._adj_sets is None:
            self._adj_sets = tuple(frozenset(nb) for nb in self._adj)
        return self._adj_sets

    def edges(self) -> Iterator[tuple[str, str]]:
        """Each edge once, endpoints in index order."""
        for i, nb in enumerate(self._adj):
            for j in nb:
                if i < j:
                    yield self._labels[i], self._labels[j]

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


@dataclass(frozen=True)
class ComponentPartition:
    """Connected-component labeling.

    ``labels`` maps every node label to a component id; component ids
    are assigned by decreasing size (ties by first appearance), so
    ``sizes[0]`` is always the giant component.
    """

    labels: Mapping[str, int]
    sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)


# -- edge-list files -----------------------------------------------------


def load_edge_list(source: str | IO[str]) -> Graph:
    """Parse the edge-list format: ``#`` comments, ``a b`` edge lines and
    ``node x`` declarations for isolated nodes.

    Duplicate edges are merged silently; self-loops are rejected.
    """
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source.read().splitlines()
    edges: list[tuple[str, str]] = []
    nodes: list[str] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "node":
            if len(parts) != 2:
                raise EdgeListParseError(
                    f"node declaration needs exactly one label: {raw!r}", lineno)
            nodes.append(parts[1])
            continue
        if len(parts) != 2:
            raise EdgeListParseError(
                f"expected two whitespace-separated labels: {raw!r}", lineno)
        a, b = parts
        if a == b:
            raise SelfLoopError(a)
        edges.append((a, b))
    return Graph(edges, nodes)


def write_edge_list(graph: Graph, target: IO[str], header: Mapping[str, object] | None = None) -> None:
    """Emit a graph in the edge-list format, deterministically ordered.

    ``header`` entries are written as ``# key=value`` comment lines, the
    convention generators use to record their configuration.
    """
    if header:
        for key, value in header.items():
            target.write(f"# {key}={value}\n")
    order = sorted(graph.labels, key=label_sort_key)
    rank = {label: i for i, label in enumerate(order)}
    edges = sorted(
        ((a, b) if rank[a] <= rank[b] else (b, a) for a, b in graph.edges()),
        key=lambda e: (rank[e[0]], rank[e[1]]),
    )
    for a, b in edges:
        target.write(f"{a} {b}\n")
    for label in order:
        if graph.degree(label) == 0:
            target.write(f"node {label}\n")


# -- structural operations ------------------------------------------------


def remove_nodes(graph: Graph, nodes: Iterable[str]) -> Graph:
    """New graph with ``nodes`` and all their incident edges deleted."""
    doomed = {graph.index_of(label) for label in nodes}
    keep_labels = [label for i, label in enumerate(graph.labels) if i not in doomed]
    edges = [
        (graph.labels[i], graph.labels[j])
        for i, nb in enumerate(graph.adjacency)
        if i not in doomed
        for j in nb
        if i < j and j not in doomed
    ]
    return Graph(edges, keep_labels)


def _component_indices(graph: Graph) -> list[list[int]]:
    """BFS component discovery in index space, in first-node order."""
    adj = graph.adjacency
    seen = [False] * graph.node_count
    components: list[list[int]] = []
    for start in range(graph.node_count):
        if seen[start]:
            continue
        seen[start] = True
        members = [start]
        queue = deque((start,))
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        components.append(members)
    return components

def connected_components(graph: Graph) -> ComponentPartition:
    """BFS component labeling; isolated nodes form singleton components."""
    components = _component_indices(graph)
    components.sort(key=lambda members: -len(members))
    labels: dict[str, int] = {}
    for cid, members in enumerate(components):
        for i in members:
            labels[graph.labels[i]] = cid
    return ComponentPartition(labels=labels, sizes=tuple(len(m) for m in components))


def giant_component_fraction(graph: Graph, original_node_count: int) -> float:
    """Size of the largest component relative to the pre-removal node count."""
    if original_node_count < 1:
        raise ValueError("original node count must be positive")
    components = _component_indices(graph)
    if not components:
        return 0.0
    return max(len(m) for m in components) / original_node_count


def local_clustering(graph: Graph, label: str) -> float:
    """Fraction of linked pairs among a node's neighbors; 0 when degree < 2."""
    v = graph.index_of(label)
    nb = graph.neighbor_sets[v]
    d = len(nb)
    if d < 2:
        return 0.0
    links = sum(len(nb & graph.neighbor_sets[j]) for j in nb) // 2
    return 2.0 * links / (d * (d - 1))


def clustering_map(graph: Graph) -> dict[str, float]:
    """Local clustering coefficient for every node."""
    sets = graph.neighbor_sets
    out: dict[str, float] = {}
    for v, label in enumerate(graph.labels):
        nb = sets[v]
        d = len(nb)
        if d < 2:
            out[label] = 0.0
        else:
            links = sum(len(nb & sets[j]) for j in nb) // 2
            out[label] = 2.0 * links / (d * (d - 1))
    return out


def average_clustering(graph: Graph) -> float:
    """Mean local clustering coefficient over all nodes."""
    if graph.node_count == 0:
        raise ValueError("average clustering of an empty graph is undefined")
    return sum(clustering_map(graph).values()) / graph.node_count


def ball_boundary(graph: Graph, label: str, radius: int) -> frozenset[str]:
    """Nodes at shortest-path distance exactly ``radius`` from ``label``."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    v = graph.index_of(label)
    if radius == 0:
        return frozenset((label,))
    adj = graph.adjacency
    dist = {v: 0}
    frontier = [v]
    for step in range(1, radius + 1):
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = step
                    nxt.append(w)
        frontier = nxt
        if not frontier:
            break
    return frozenset(graph.labels[i] for i in frontier)


def degree_distribution_entropy(graph: Graph) -> float:
    """Shannon entropy (nats) of the empirical degree distribution."""
    n = graph.node_count
    if n == 0:
        raise ValueError("degree entropy of an empty graph is undefined")
    counts = Counter(graph.degrees)
    return -sum((c / n) * math.log(c / n) for c in counts.values())
