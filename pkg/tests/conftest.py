"""Shared builders and independent brute-force oracles."""

import itertools
import random

import pytest

from vnentropy import Graph


def assert_valid_graph(g: Graph) -> None:
    """Structural invariants every graph must satisfy after any operation."""
    n = g.node_count
    adj = g.adjacency
    assert len(g.labels) == n == len(set(g.labels))
    for i, nb in enumerate(adj):
        assert i not in nb, "self-loop"
        assert len(set(nb)) == len(nb), "duplicate neighbor"
        assert list(nb) == sorted(nb)
        assert g.degrees[i] == len(nb)
        for j in nb:
            assert i in adj[j], "asymmetric adjacency"
    assert sum(g.degrees) == 2 * g.edge_count


def path_graph(n: int) -> Graph:
    return Graph([(str(i), str(i + 1)) for i in range(1, n)], [str(i) for i in range(1, n + 1)])


def cycle_graph(n: int) -> Graph:
    return Graph([(str(i), str(i % n + 1)) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    labels = [str(i) for i in range(1, n + 1)]
    return Graph(list(itertools.combinations(labels, 2)), labels)


def star_graph(leaves: int) -> Graph:
    return Graph([("c", str(i)) for i in range(1, leaves + 1)])


def wheel6() -> Graph:
    rim = [str(i) for i in range(1, 7)]
    edges = [(rim[i], rim[(i + 1) % 6]) for i in range(6)]
    edges += [("7", r) for r in rim]
    return Graph(edges)


def random_graph(rng: random.Random, n: int, p: float,
                 forbid_isolated: bool = False) -> Graph:
    while True:
        labels = [str(i) for i in range(n)]
        edges = [(labels[i], labels[j])
                 for i in range(n) for j in range(i + 1, n)
                 if rng.random() < p]
        g = Graph(edges, labels)
        if not forbid_isolated or all(d > 0 for d in g.degrees) or n == 0:
            return g


# -- independent oracles ----------------------------------------------------


def brute_force_clustering(g: Graph, label: str) -> float:
    """Triangle-count definition evaluated by triple loop."""
    v = g.index_of(label)
    nb = list(g.adjacency[v])
    d = len(nb)
    if d < 2:
        return 0.0
    triangles = 0
    for a in range(d):
        for b in range(a + 1, d):
            if nb[b] in g.adjacency[nb[a]]:
                triangles += 1
    return 2.0 * triangles / (d * (d - 1))


def brute_force_betweenness(g: Graph) -> dict[str, float]:
    """Enumerate all shortest paths between every pair by BFS layers."""
    from collections import deque

    n = g.node_count
    adj = g.adjacency

    def shortest_paths(s, t):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        if t not in dist:
            return []
        paths = []

        def extend(path):
            v = path[-1]
            if v == t:
                paths.append(path)
                return
            for w in adj[v]:
                if dist.get(w) == dist[v] + 1 and dist[w] <= dist[t]:
                    extend(path + [w])

        extend([s])
        return paths

    score = {label: 0.0 for label in g.labels}
    for s in range(n):
        for t in range(s + 1, n):
            paths = shortest_paths(s, t)
            if not paths:
                continue
            for path in paths:
                for v in path[1:-1]:
                    score[g.labels[v]] += 1.0 / len(paths)
    return score


@pytest.fixture
def rng():
    return random.Random(20240811)
