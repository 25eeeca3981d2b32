"""Normalized Laplacian spectra and the spectral entropy centrality.

The entropy of a graph is read off the eigenvalues of its normalized
Laplacian: S = -sum (l/2) ln(l/2), with 0 ln 0 taken as 0. A node's
centrality is the absolute entropy change caused by deleting it. Both
an exact form (one eigendecomposition per candidate) and degree-local
approximations derived from truncating ln x around x = 1 are provided;
the truncations are evaluated through traces of Laplacian powers, so
they need only degree and triangle information.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .eigen import symmetric_eigenvalues
from .graph import Graph, remove_nodes
from .scores import CentralityScores, Method

__all__ = [
    "normalized_laplacian",
    "entropy_from_spectrum",
    "von_neumann_entropy",
    "entropy_centrality_exact",
    "entropy_centrality_subgraph",
    "entropy_centrality_all",
    "entropy_centrality_approx",
    "entropy_centrality_approx_all",
    "entropy_s1",
    "entropy_s2",
    "trace_power",
]


def normalized_laplacian(graph: Graph) -> np.ndarray:
    """Dense normalized Laplacian: 1 on the diagonal for non-isolated
    nodes, -1/sqrt(d_i d_j) across edges, 0 elsewhere (isolated nodes
    contribute all-zero rows)."""
    n = graph.node_count
    degrees = np.array(graph.degrees, dtype=float)
    lap = np.zeros((n, n))
    for i, nb in enumerate(graph.adjacency):
        if not nb:
            continue
        cols = np.fromiter(nb, dtype=int)
        lap[i, cols] = -1.0 / np.sqrt(degrees[i] * degrees[cols])
        lap[i, i] = 1.0
    return lap


def entropy_from_spectrum(eigenvalues: Iterable[float]) -> float:
    """Entropy of a normalized-Laplacian spectrum, in nats."""
    total = 0.0
    for lam in eigenvalues:
        t = lam / 2.0
        if t > 1e-15:
            total -= t * math.log(t)
    return total


def von_neumann_entropy(graph: Graph) -> float:
    """Spectral entropy of the graph, in nats."""
    if graph.node_count == 0:
        return 0.0
    return entropy_from_spectrum(symmetric_eigenvalues(normalized_laplacian(graph)))


def entropy_centrality_exact(graph: Graph, node: str) -> float:
    """Absolute entropy change when ``node`` and its edges are deleted."""
    graph.index_of(node)
    return abs(von_neumann_entropy(graph) - von_neumann_entropy(remove_nodes(graph, (node,))))


def entropy_centrality_subgraph(graph: Graph, nodes: Iterable[str]) -> float:
    """Absolute entropy change when a whole node set is deleted."""
    doomed = set(nodes)
    for node in doomed:
        graph.index_of(node)
    if len(doomed) == graph.node_count:
        raise ValueError("cannot score the full node set: nothing would remain")
    return abs(von_neumann_entropy(graph) - von_neumann_entropy(remove_nodes(graph, doomed)))


def entropy_centrality_all(graph: Graph) -> CentralityScores:
    """Exact entropy centrality for every node (one eigendecomposition each)."""
    if graph.node_count < 2:
        raise ValueError("entropy centrality needs at least two nodes")
    base = von_neumann_entropy(graph)
    scores = {
        label: abs(base - von_neumann_entropy(remove_nodes(graph, (label,))))
        for label in graph.labels
    }
    return CentralityScores(Method.CE_EXACT, scores)


# -- degree-local approximations ------------------------------------------


def _require_no_isolated(graph: Graph) -> None:
    for label, degree in zip(graph.labels, graph.degrees):
        if degree == 0:
            raise ValueError(
                f"node {label!r} is isolated; degree-based approximations are undefined")


def _ordered_pair_sum(graph: Graph) -> float:
    """Sum of 1/(d_i d_j) over ordered adjacent pairs (each edge twice)."""
    degrees = graph.degrees
    inv = [1.0 / d if d else 0.0 for d in degrees]
    return sum(inv[i] * sum(inv[j] for j in nb) for i, nb in enumerate(graph.adjacency))


def _ordered_triangle_sum(graph: Graph) -> float:
    """Sum of 1/(d_i d_j d_k) over ordered triangles (each triangle six times)."""
    inv = [1.0 / d if d else 0.0 for d in graph.degrees]
    sets = graph.neighbor_sets
    total = 0.0
    for i, nb in enumerate(graph.adjacency):
        for j in nb:
            if j <= i:
                continue
            common = sets[i] & sets[j]
            if common:
                total += inv[i] * inv[j] * sum(inv[k] for k in common)
    # each unordered triangle was visited once per edge: three times
    return 2.0 * total


def trace_power(graph: Graph, power: int) -> float:
    """Trace of the normalized Laplacian raised to ``power`` (1, 2 or 3),
    computed from degrees and triangles without eigenvalues."""
    if power not in (1, 2, 3):
        raise ValueError("trace power is only available for exponents 1, 2 and 3")
    _require_no_isolated(graph)
    n = graph.node_count
    if power == 1:
        return float(n)
    pair = _ordered_pair_sum(graph)
    if power == 2:
        return n + pair
    return n + 3.0 * pair - _ordered_triangle_sum(graph)


def entropy_s1(graph: Graph) -> float:
    """First-order entropy approximation |V|/4 - sum 1/(4 d_i d_j) over
    ordered adjacent pairs."""
    _require_no_isolated(graph)
    return graph.node_count / 4.0 - _ordered_pair_sum(graph) / 4.0


def entropy_s2(graph: Graph, alt_coefficients: bool = False) -> float:
    """Second-order entropy approximation via Laplacian power traces:

        S2 = (3/4) Tr(L) - (1/2) Tr(L^2) + (1/16) Tr(L^3)

    which equals the series truncation sum_i [(3/2)t - 2t^2 + (1/2)t^3]
    with t = lambda/2. With ``alt_coefficients`` the alternative closed
    form (5/16)|V| - (11/16) sum 1/(d_i d_j) + (1/16) sum 1/(d_i d_j d_k)
    is returned instead; it is kept only for comparison, as it fails the
    eigenvalue-based truncation check already on a single edge.
    """
    _require_no_isolated(graph)
    if alt_coefficients:
        n = graph.node_count
        return (5.0 * n - 11.0 * _ordered_pair_sum(graph)
                + _ordered_triangle_sum(graph)) / 16.0
    return (0.75 * trace_power(graph, 1) - 0.5 * trace_power(graph, 2)
            + trace_power(graph, 3) / 16.0)


def entropy_centrality_approx(graph: Graph, node: str) -> float:
    """Degree-local entropy centrality using only the node's first and
    second neighborhood:

        1/4 - sum_{j~v} 1/(4 d_v d_j)
            + sum_{v~j~k, k != v} 1/(4 (d_j - 1) d_j d_k)

    Neighbors of degree 1 contribute no second-neighbor paths. Isolated
    nodes score 0: deleting them cannot change any structure.
    """
    v = graph.index_of(node)
    degrees = graph.degrees
    adj = graph.adjacency
    dv = degrees[v]
    if dv == 0:
        return 0.0
    score = 0.25
    for j in adj[v]:
        dj = degrees[j]
        score -= 1.0 / (4.0 * dv * dj)
        if dj < 2:
            continue
        weight = 1.0 / (4.0 * (dj - 1) * dj)
        for k in adj[j]:
            if k != v:
                score += weight / degrees[k]
    return score


def entropy_centrality_approx_all(graph: Graph) -> CentralityScores:
    """Approximate entropy centrality for every node in one sweep."""
    degrees = graph.degrees
    adj = graph.adjacency
    inv = [1.0 / d if d else 0.0 for d in degrees]
    # neighbor_inv_sum[j] = sum over k~j of 1/d_k
    neighbor_inv_sum = [sum(inv[k] for k in nb) for nb in adj]
    weight = [1.0 / ((d - 1) * d) if d >= 2 else 0.0 for d in degrees]
    scores: dict[str, float] = {}
    for v, label in enumerate(graph.labels):
        if degrees[v] == 0:
            scores[label] = 0.0
            continue
        inv_v = inv[v]
        second = 0.0
        for j in adj[v]:
            second += weight[j] * (neighbor_inv_sum[j] - inv_v)
        scores[label] = 0.25 - 0.25 * inv_v * neighbor_inv_sum[v] + 0.25 * second
    return CentralityScores(Method.CE_APPROX, scores)
