"""Classical node-importance baselines.

All functions are pure: they take an immutable graph and return a
``CentralityScores`` value, so they can be evaluated concurrently and
re-evaluated freely inside adaptive dismantling loops.
"""

from __future__ import annotations

from collections import deque

from .errors import ConvergenceError
from .graph import Graph, ball_boundary, clustering_map, connected_components
from .scores import CentralityScores, Method

__all__ = [
    "degree_centrality",
    "betweenness_centrality",
    "closeness_centrality",
    "eigenvector_centrality",
    "pagerank",
    "k_core",
    "clustering_centrality",
    "collective_influence",
    "compute_centrality",
]


def degree_centrality(graph: Graph) -> CentralityScores:
    scores = {label: float(d) for label, d in zip(graph.labels, graph.degrees)}
    return CentralityScores(Method.DC, scores)


def betweenness_centrality(graph: Graph) -> CentralityScores:
    """Exact shortest-path betweenness (Brandes accumulation), raw
    unordered pair counts, no normalization."""
    n = graph.node_count
    adj = graph.adjacency
    bc = [0.0] * n
    for source in range(n):
        stack: list[int] = []
        predecessors: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        sigma[source] = 1
        dist = [-1] * n
        dist[source] = 0
        queue = deque((source,))
        while queue:
            v = queue.popleft()
            stack.append(v)
            next_dist = dist[v] + 1
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = next_dist
                    queue.append(w)
                if dist[w] == next_dist:
                    sigma[w] += sigma[v]
                    predecessors[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in predecessors[w]:
                delta[v] += sigma[v] * coeff
            if w != source:
                bc[w] += delta[w]
    # every unordered pair was accumulated from both endpoints
    scores = {label: bc[i] / 2.0 for i, label in enumerate(graph.labels)}
    return CentralityScores(Method.BC, scores)


def closeness_centrality(graph: Graph) -> CentralityScores:
    """Within-component closeness: (#reachable - 1) / sum of distances.

    Nodes that reach nothing (isolated) score 0, which keeps the measure
    defined on disconnected graphs.
    """
    n = graph.node_count
    adj = graph.adjacency
    scores: dict[str, float] = {}
    for source, label in enumerate(graph.labels):
        dist = [-1] * n
        dist[source] = 0
        queue = deque((source,))
        total = 0
        reached = 0
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    total += dist[w]
                    reached += 1
                    queue.append(w)
        scores[label] = reached / total if total else 0.0
    return CentralityScores(Method.CC, scores)


def eigenvector_centrality(graph: Graph, max_iterations: int = 1000,
                           tolerance: float = 1e-10) -> CentralityScores:
    """Principal adjacency eigenvector on the largest component,
    non-negative and normalized to maximum 1; all other nodes score 0.

    Power iteration runs on A + I so bipartite components cannot make
    the iterates oscillate between the two dominant eigendirections.
    """
    if graph.edge_count == 0:
        raise ValueError("eigenvector centrality needs at least one edge")
    parts = connected_components(graph)
    members = [graph.index_of(v) for v, cid in parts.labels.items() if cid == 0]
    members.sort()
    position = {v: i for i, v in enumerate(members)}
    adj = graph.adjacency
    size = len(members)
    x = [1.0] * size
    for _ in range(max_iterations):
        new = [x[i] + sum(x[position[w]] for w in adj[v]) for i, v in enumerate(members)]
        peak = max(new)
        new = [value / peak for value in new]
        if max(abs(a - b) for a, b in zip(new, x)) < tolerance:
            x = new
            break
        x = new
    else:
        raise ConvergenceError(
            f"power iteration did not converge in {max_iterations} iterations")
    scores = {label: 0.0 for label in graph.labels}
    for i, v in enumerate(members):
        scores[graph.labels[v]] = x[i]
    return CentralityScores(Method.EC, scores)


def pagerank(graph: Graph, damping: float = 0.85,
             tolerance: float = 1e-10) -> CentralityScores:
    """Random-walk PageRank with uniform teleport; scores sum to 1.

    Isolated nodes are dangling: their mass is redistributed uniformly.
    """
    n = graph.node_count
    if n == 0:
        raise ValueError("pagerank of an empty graph is undefined")
    adj = graph.adjacency
    degrees = graph.degrees
    rank = [1.0 / n] * n
    base = (1.0 - damping) / n
    for _ in range(10_000):
        dangling = sum(r for r, d in zip(rank, degrees) if d == 0)
        spread = damping * dangling / n
        contribution = [r / d if d else 0.0 for r, d in zip(rank, degrees)]
        new = [base + spread + damping * sum(contribution[w] for w in adj[v])
               for v in range(n)]
        if sum(abs(a - b) for a, b in zip(new, rank)) < tolerance:
            rank = new
            break
        rank = new
    scores = {label: rank[i] for i, label in enumerate(graph.labels)}
    return CentralityScores(Method.PR, scores)


def k_core(graph: Graph) -> CentralityScores:
    """Core numbers by iterative minimum-degree peeling."""
    n = graph.node_count
    adj = graph.adjacency
    degree = list(graph.degrees)
    core = [0] * n
    alive = [True] * n
    # repeatedly strip everything of degree <= k, raising k as needed
    remaining = n
    k = 0
    while remaining:
        k_level = min(degree[v] for v in range(n) if alive[v])
        k = max(k, k_level)
        queue = deque(v for v in range(n) if alive[v] and degree[v] <= k)
        while queue:
            v = queue.popleft()
            if not alive[v]:
                continue
            alive[v] = False
            core[v] = k
            remaining -= 1
            for w in adj[v]:
                if alive[w]:
                    degree[w] -= 1
                    if degree[w] <= k:
                        queue.append(w)
    scores = {label: float(core[i]) for i, label in enumerate(graph.labels)}
    return CentralityScores(Method.KC, scores)


def clustering_centrality(graph: Graph) -> CentralityScores:
    """Local clustering coefficient used as a removal score."""
    return CentralityScores(Method.CLC, clustering_map(graph))


def collective_influence(graph: Graph, radius: int = 2) -> CentralityScores:
    """CI_r(v) = (d_v - 1) * sum of (d_u - 1) over nodes exactly
    ``radius`` hops from v."""
    if radius < 1:
        raise ValueError("collective influence radius must be positive")
    scores: dict[str, float] = {}
    for label, d in zip(graph.labels, graph.degrees):
        if d == 0:
            scores[label] = 0.0
            continue
        boundary = ball_boundary(graph, label, radius)
        scores[label] = float((d - 1) * sum(graph.degree(u) - 1 for u in boundary))
    return CentralityScores(Method.CI, scores)


def compute_centrality(graph: Graph, method: Method, ci_radius: int = 2) -> CentralityScores:
    """Dispatch a method tag to its implementation."""
    from . import spectral  # deferred: spectral also imports scores

    table = {
        Method.DC: degree_centrality,
        Method.BC: betweenness_centrality,
        Method.CC: closeness_centrality,
        Method.EC: eigenvector_centrality,
        Method.PR: pagerank,
        Method.KC: k_core,
        Method.CLC: clustering_centrality,
        Method.CE_EXACT: spectral.entropy_centrality_all,
        Method.CE_APPROX: spectral.entropy_centrality_approx_all,
    }
    if method is Method.CI:
        return collective_influence(graph, radius=ci_radius)
    try:
        implementation = table[method]
    except KeyError:
        raise ValueError(f"unknown centrality method: {method!r}") from None
    return implementation(graph)
