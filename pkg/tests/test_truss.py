import itertools

import numpy as np
import pytest

import oracles
from linkcohesion import Graph, maximal_community_truss, truss_decomposition

from conftest import complete_graph, cycle_graph, make_graph, random_graph


class TestTrussDecomposition:
    def test_k4_all_edges_level_4(self):
        assert np.all(truss_decomposition(complete_graph(4)) == 4)

    def test_square_all_edges_level_2(self):
        assert np.all(truss_decomposition(cycle_graph(4)) == 2)

    def test_k5_with_pendant(self):
        edges = list(itertools.combinations(range(5), 2)) + [(4, 5)]
        g = make_graph(6, edges)
        tr = truss_decomposition(g)
        pendant = g.require_edge_id(4, 5)
        assert tr[pendant] == 2
        others = np.delete(tr, pendant)
        assert np.all(others == 5)

    def test_empty_graph(self):
        assert truss_decomposition(Graph(4, [], [])).size == 0

    def test_matches_fixed_point_oracle(self):
        rng = np.random.default_rng(2024)
        for _ in range(30):
            g = random_graph(rng, max_n=50, min_n=5)
            tr = truss_decomposition(g)
            expected = oracles.trussness_fixed_point(
                g.num_vertices, list(g.edge_pairs())
            )
            for e, pair in enumerate(g.edge_pairs()):
                assert tr[e] == expected[pair], f"edge {pair}"

    def test_nesting_against_independent_levels(self):
        """Each k-truss, recomputed from scratch, nests inside the previous
        one and matches the trussness >= k mask."""

        def k_truss_edges(n, edges, k):
            cur = set(edges)
            while True:
                adj = oracles.adjacency_sets(n, cur)
                drop = [(u, v) for u, v in cur if len(adj[u] & adj[v]) < k - 2]
                if not drop:
                    return cur
                cur -= set(drop)

        rng = np.random.default_rng(77)
        for _ in range(8):
            g = random_graph(rng, max_n=25)
            tr = truss_decomposition(g)
            edges = list(g.edge_pairs())
            prev = set(edges)
            for k in range(3, int(tr.max()) + 2):
                level = k_truss_edges(g.num_vertices, edges, k)
                assert level <= prev
                assert level == {e for i, e in enumerate(edges) if tr[i] >= k}
                prev = level

    def test_support_inside_chosen_truss(self):
        rng = np.random.default_rng(5150)
        for _ in range(10):
            g = random_graph(rng, max_n=30)
            tr = truss_decomposition(g)
            for k in range(3, int(tr.max()) + 1):
                keep = tr >= k
                sub = g.subgraph_with_edges(keep)
                for u, v in sub.edge_pairs():
                    common = np.intersect1d(
                        sub.neighbors(u), sub.neighbors(v), assume_unique=True
                    )
                    assert common.size >= k - 2

    def test_vertex_order_does_not_change_trussness(self):
        rng = np.random.default_rng(404)
        g = random_graph(rng, max_n=25)
        tr = {pair: t for pair, t in zip(g.edge_pairs(), truss_decomposition(g))}
        for _ in range(5):
            perm = rng.permutation(g.num_vertices)
            edges = [(int(perm[u]), int(perm[v])) for u, v in g.edge_pairs()]
            g2 = make_graph(g.num_vertices, edges)
            tr2 = {pair: t for pair, t in zip(g2.edge_pairs(), truss_decomposition(g2))}
            for (u, v), t in tr.items():
                a, b = int(perm[u]), int(perm[v])
                assert tr2[(min(a, b), max(a, b))] == t


class TestMaximalCommunityTruss:
    def test_two_disjoint_k4s(self):
        edges = list(itertools.combinations(range(4), 2))
        edges += [(u + 4, v + 4) for u, v in edges]
        g = make_graph(8, edges)
        result = maximal_community_truss(g)
        assert result.chosen_level == 4
        assert result.cluster_count == 2
        assert result.labels.community_count == 2

    def test_tie_prefers_lower_level(self):
        # two K5s: levels 4 and 5 both give 2 clusters; 4 wins the tie
        edges = list(itertools.combinations(range(5), 2))
        edges += [(u + 5, v + 5) for u, v in edges]
        g = make_graph(10, edges)
        result = maximal_community_truss(g)
        assert result.level_clusters == {4: 2, 5: 2}
        assert result.chosen_level == 4

    def test_no_triangles_yields_zero_clusters(self):
        result = maximal_community_truss(cycle_graph(6))
        assert result.chosen_level is None
        assert result.cluster_count == 0
        assert result.labels.community_count == 0
        assert np.all(result.labels.labels == -1)

    def test_no_edges_is_an_error(self):
        with pytest.raises(ValueError, match="at least one edge"):
            maximal_community_truss(Graph(3, [], []))

    def test_labels_cover_exactly_the_chosen_truss(self):
        rng = np.random.default_rng(88)
        for _ in range(10):
            g = random_graph(rng, max_n=30, p=0.35)
            result = maximal_community_truss(g)
            if result.chosen_level is None:
                continue
            in_truss = np.zeros(g.num_vertices, dtype=bool)
            keep = result.trussness >= result.chosen_level
            in_truss[g.edges_u[keep]] = True
            in_truss[g.edges_v[keep]] = True
            assert np.array_equal(result.labels.labels >= 0, in_truss)

    def test_level_counts_match_recomputation(self):
        from linkcohesion import connected_components

        rng = np.random.default_rng(303)
        g = random_graph(rng, max_n=40, p=0.3)
        result = maximal_community_truss(g)
        for k, count in result.level_clusters.items():
            comps = connected_components(g, result.trussness >= k)
            assert comps.count == count
