import itertools
import math
import random

import numpy as np
import pytest

from vnentropy import (
    Graph,
    Method,
    UnknownNodeError,
    connected_components,
    count_zero_eigenvalues,
    entropy_centrality_all,
    entropy_centrality_approx,
    entropy_centrality_approx_all,
    entropy_centrality_exact,
    entropy_centrality_subgraph,
    entropy_s1,
    entropy_s2,
    load_dataset,
    normalized_laplacian,
    symmetric_eigenvalues,
    trace_power,
    von_neumann_entropy,
)
from conftest import (
    complete_graph,
    path_graph,
    random_graph,
    star_graph,
    wheel6,
)


def series_truncation(graph: Graph, order: int) -> float:
    """Independent oracle: entropy series cut at the given order,
    evaluated from LAPACK eigenvalues of the normalized Laplacian.

    -t ln t ~ t(1-t) + t(1-t)^2/2 + ... + t(1-t)^order/order
    """
    t = np.linalg.eigvalsh(normalized_laplacian(graph)) / 2.0
    total = 0.0
    for k in range(1, order + 1):
        total += float(np.sum(t * (1.0 - t) ** k)) / k
    return total


class TestNormalizedLaplacian:
    def test_k2_entries(self):
        lap = normalized_laplacian(complete_graph(2))
        assert lap == pytest.approx(np.array([[1.0, -1.0], [-1.0, 1.0]]))

    def test_k3_entries(self):
        lap = normalized_laplacian(complete_graph(3))
        assert np.allclose(np.diag(lap), 1.0)
        off = lap[~np.eye(3, dtype=bool)]
        assert off == pytest.approx(np.full(6, -0.5))

    def test_isolated_node_row_is_zero(self):
        lap = normalized_laplacian(Graph(nodes=["x"]))
        assert lap == pytest.approx(np.zeros((1, 1)))
        mixed = Graph([("a", "b")], nodes=["a", "b", "z"])
        lap = normalized_laplacian(mixed)
        assert lap[2] == pytest.approx(np.zeros(3))
        assert lap[:, 2] == pytest.approx(np.zeros(3))

    def test_entry_ranges(self, rng):
        for _ in range(10):
            g = random_graph(rng, rng.randint(1, 15), rng.random())
            lap = normalized_laplacian(g)
            assert np.allclose(lap, lap.T)
            diag = np.diag(lap)
            assert set(np.round(diag, 12)) <= {0.0, 1.0}
            off = lap[~np.eye(g.node_count, dtype=bool)]
            assert np.all(off <= 0.0) and np.all(off >= -1.0)


class TestEntropy:
    def test_k2_zero(self):
        assert von_neumann_entropy(complete_graph(2)) == pytest.approx(0.0, abs=1e-12)

    def test_k3_value(self):
        expected = -2 * 0.75 * math.log(0.75)
        assert von_neumann_entropy(complete_graph(3)) == pytest.approx(expected, abs=1e-12)

    def test_star_value(self):
        assert von_neumann_entropy(star_graph(3)) == pytest.approx(math.log(2), abs=1e-12)

    def test_empty_graph(self):
        assert von_neumann_entropy(Graph()) == 0.0

    def test_relabeling_invariance(self, rng):
        for _ in range(8):
            g = random_graph(rng, rng.randint(2, 20), rng.random())
            base = von_neumann_entropy(g)
            shuffled = list(g.labels)
            rng.shuffle(shuffled)
            mapping = dict(zip(g.labels, shuffled))
            h = Graph([(mapping[a], mapping[b]) for a, b in g.edges()],
                      [mapping[v] for v in shuffled])
            assert von_neumann_entropy(h) == pytest.approx(base, abs=1e-10)

    def test_spectrum_invariants_on_random_graphs(self, rng):
        for _ in range(15):
            g = random_graph(rng, rng.randint(1, 30), rng.random() * 0.5)
            eigs = symmetric_eigenvalues(normalized_laplacian(g))
            assert eigs[0] >= -1e-8
            assert eigs[-1] <= 2.0 + 1e-8
            non_isolated = sum(1 for d in g.degrees if d > 0)
            assert eigs.sum() == pytest.approx(non_isolated, abs=1e-8)
            assert count_zero_eigenvalues(eigs) == connected_components(g).count


class TestExactCentrality:
    def test_k2_both_nodes_zero(self):
        g = complete_graph(2)
        assert entropy_centrality_exact(g, "1") == pytest.approx(0.0, abs=1e-12)

    def test_unknown_node(self):
        with pytest.raises(UnknownNodeError):
            entropy_centrality_exact(complete_graph(2), "z")

    def test_karate_spectrum_claims(self):
        g = load_dataset("karate")
        c1 = entropy_centrality_exact(g, "1")
        c3 = entropy_centrality_exact(g, "3")
        c34 = entropy_centrality_exact(g, "34")
        assert c1 > c3
        assert c34 > c3

    def test_florentine_argmax_is_medici(self):
        scores = entropy_centrality_all(load_dataset("florentine"))
        assert scores.top(1) == ["Medici"]

    def test_isolated_node_scores_zero(self):
        g = Graph([("a", "b"), ("b", "c")], nodes=["a", "b", "c", "z"])
        assert entropy_centrality_exact(g, "z") == pytest.approx(0.0, abs=1e-12)

    def test_subgraph_singleton_equals_exact(self, rng):
        g = random_graph(rng, 8, 0.4)
        for v in g.labels[:4]:
            assert entropy_centrality_subgraph(g, {v}) == entropy_centrality_exact(g, v)

    def test_subgraph_wheel_hub(self):
        g = wheel6()
        assert entropy_centrality_subgraph(g, {"7"}) == entropy_centrality_exact(g, "7")

    def test_subgraph_k3_pair(self):
        value = entropy_centrality_subgraph(complete_graph(3), {"1", "2"})
        assert value == pytest.approx(-2 * 0.75 * math.log(0.75), abs=1e-12)

    def test_subgraph_rejects_everything(self):
        with pytest.raises(ValueError):
            entropy_centrality_subgraph(complete_graph(3), {"1", "2", "3"})

    def test_all_scores_k3_symmetric(self):
        scores = entropy_centrality_all(complete_graph(3))
        values = list(scores.scores.values())
        assert values[0] == pytest.approx(values[1], abs=1e-12)
        assert values[0] == pytest.approx(values[2], abs=1e-12)

    def test_all_rejects_single_node(self):
        with pytest.raises(ValueError):
            entropy_centrality_all(Graph(nodes=["a"]))

    def test_gift_ranking(self):
        scores = entropy_centrality_all(load_dataset("gift"))
        assert scores.top(5) == ["17", "11", "12", "7", "5"]


class TestSeriesApproximations:
    def test_s1_hand_values(self):
        assert entropy_s1(complete_graph(2)) == pytest.approx(0.0, abs=1e-15)
        assert entropy_s1(complete_graph(3)) == pytest.approx(0.375)
        assert entropy_s1(star_graph(3)) == pytest.approx(0.5)

    def test_s1_rejects_isolated_naming_node(self):
        g = Graph([("a", "b")], nodes=["a", "b", "lonely"])
        with pytest.raises(ValueError, match="lonely"):
            entropy_s1(g)

    def test_s2_hand_values(self):
        assert entropy_s2(complete_graph(2)) == pytest.approx(0.0, abs=1e-15)
        assert entropy_s2(complete_graph(3)) == pytest.approx(0.421875)

    def test_s2_alt_coefficients_fail_oracle_on_k2(self):
        k2 = complete_graph(2)
        alt = entropy_s2(k2, alt_coefficients=True)
        assert alt == pytest.approx(-0.75)
        assert abs(alt - series_truncation(k2, 2)) > 0.5

    def test_s1_s2_match_series_truncations(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 8), 0.3 + 0.7 * rng.random(),
                             forbid_isolated=True)
            assert entropy_s1(g) == pytest.approx(series_truncation(g, 1), abs=1e-12)
            assert entropy_s2(g) == pytest.approx(series_truncation(g, 2), abs=1e-12)

    def test_trace_power_values(self):
        assert trace_power(complete_graph(2), 2) == pytest.approx(4.0)
        assert trace_power(complete_graph(3), 3) == pytest.approx(6.75)

    def test_trace_power_triangle_free(self):
        g = star_graph(4)
        pair_sum = sum(1.0 / (g.degree(a) * g.degree(b)) for a, b in g.edges()) * 2
        assert trace_power(g, 3) == pytest.approx(g.node_count + 3 * pair_sum)

    def test_trace_power_matches_eigenvalues(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(2, 50), 0.2 + 0.5 * rng.random(),
                             forbid_isolated=True)
            eigs = np.linalg.eigvalsh(normalized_laplacian(g))
            for t in (1, 2, 3):
                assert trace_power(g, t) == pytest.approx(float(np.sum(eigs ** t)), abs=1e-9)

    def test_trace_power_domain(self):
        with pytest.raises(ValueError):
            trace_power(complete_graph(3), 4)
        with pytest.raises(ValueError):
            trace_power(Graph(nodes=["a"]), 2)


class TestApproximateCentrality:
    def test_k2_zero(self):
        assert entropy_centrality_approx(complete_graph(2), "1") == pytest.approx(0.0, abs=1e-15)

    def test_k3_symmetric(self):
        g = complete_graph(3)
        values = [entropy_centrality_approx(g, v) for v in g.labels]
        assert values[0] == pytest.approx(values[1])
        assert values[1] == pytest.approx(values[2])

    def test_star_hand_values(self):
        # 1/4 - sum 1/(4*3*1) = 0 for the center (degree-1 neighbors add
        # no second-order paths); each leaf gets 1/4 - 1/12 + 2/24 = 1/4
        g = star_graph(3)
        assert entropy_centrality_approx(g, "c") == pytest.approx(0.0, abs=1e-15)
        assert entropy_centrality_approx(g, "1") == pytest.approx(0.25)

    def test_never_negative(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(2, 15), rng.random(), forbid_isolated=True)
            for v in g.labels:
                assert entropy_centrality_approx(g, v) >= 0.0

    def test_unknown_node(self):
        with pytest.raises(UnknownNodeError):
            entropy_centrality_approx(complete_graph(3), "zz")

    def test_batch_matches_single(self, rng):
        for _ in range(15):
            g = random_graph(rng, rng.randint(2, 20), rng.random())
            batch = entropy_centrality_approx_all(g)
            assert batch.method is Method.CE_APPROX
            for v in g.labels:
                assert batch.scores[v] == pytest.approx(entropy_centrality_approx(g, v), abs=1e-13)

    def test_isolated_nodes_score_zero(self):
        g = Graph([("a", "b")], nodes=["a", "b", "z"])
        assert entropy_centrality_approx(g, "z") == 0.0
        assert entropy_centrality_approx_all(g).scores["z"] == 0.0

    def test_ranking_correlates_with_exact(self, rng):
        from vnentropy import spearman

        random_state = random.Random(5)
        agreements = []
        for _ in range(5):
            g = random_graph(random_state, 40, 0.12, forbid_isolated=True)
            agreements.append(spearman(entropy_centrality_all(g),
                                       entropy_centrality_approx_all(g)))
        assert sum(agreements) / len(agreements) > 0.5
