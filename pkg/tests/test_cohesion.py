import numpy as np
import pytest

import oracles
from linkcohesion import (
    double_link_strength,
    score_all,
    single_link_strength,
    triple_link_strength,
)

from conftest import complete_graph, cycle_graph, make_graph, random_graph


class TestSingleLinkStrength:
    def test_triangle(self):
        g = complete_graph(3)
        assert single_link_strength(g, (0, 1)) == 0.25

    def test_path_endpoint(self):
        g = make_graph(3, [(0, 1), (1, 2)])
        assert single_link_strength(g, (0, 1)) == 0.5

    def test_star_spoke(self):
        g = make_graph(6, [(0, i) for i in range(1, 6)])
        assert single_link_strength(g, (0, 3)) == pytest.approx(1 / 5)

    def test_not_an_edge(self):
        g = make_graph(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError, match="not an edge"):
            single_link_strength(g, (0, 2))


class TestDoubleLinkStrength:
    def test_triangle(self):
        assert double_link_strength(complete_graph(3), (0, 1)) == pytest.approx(1 / 64)

    def test_square_has_no_common_neighbor(self):
        assert double_link_strength(cycle_graph(4), (0, 1)) == 0.0

    def test_k4(self):
        assert double_link_strength(complete_graph(4), (0, 1)) == pytest.approx(2 / 729)


class TestTripleLinkStrength:
    def test_square_single_path(self):
        assert triple_link_strength(cycle_graph(4), (0, 1)) == pytest.approx(1 / 256)

    def test_triangle_has_none(self):
        assert triple_link_strength(complete_graph(3), (0, 1)) == 0.0

    def test_k4_counts_both_orientations(self):
        assert triple_link_strength(complete_graph(4), (0, 1)) == pytest.approx(2 / 6561)


class TestScoreAll:
    def test_triangle_table(self):
        t = score_all(complete_graph(3))
        assert np.allclose(t.c1, 0.5)
        assert np.allclose(t.c2, 0.5)
        assert np.allclose(t.c3, 0.0)
        assert np.allclose(t.cohesion, 1 / 3)

    def test_square_table(self):
        t = score_all(cycle_graph(4))
        assert np.allclose(t.c1, 0.5)
        assert np.allclose(t.c2, 0.0)
        assert np.allclose(t.c3, 0.5)
        assert np.allclose(t.cohesion, 1 / 3)

    def test_short_path_table(self):
        t = score_all(make_graph(3, [(0, 1), (1, 2)]))
        assert np.allclose(t.cohesion, 1 / 6)

    def test_empty_graph_rejected(self):
        from linkcohesion import Graph

        with pytest.raises(ValueError, match="at least one edge"):
            score_all(Graph(3, [], []))

    def test_zero_weights_rejected(self):
        with pytest.raises(ValueError, match="zero"):
            score_all(complete_graph(3), (0, 0, 0))
        with pytest.raises(ValueError, match="non-negative"):
            score_all(complete_graph(3), (1, -1, 1))

    def test_weight_recovery(self):
        """Single-hop binary weightings reproduce the per-hop columns."""
        g = random_graph(np.random.default_rng(5), max_n=20)
        full = score_all(g)
        for idx, w in enumerate([(1, 0, 0), (0, 1, 0), (0, 0, 1)]):
            t = score_all(g, w)
            expected = (full.c1, full.c2, full.c3)[idx]
            assert np.array_equal(t.cohesion, expected)

    def test_weights_normalize_by_sum(self):
        g = random_graph(np.random.default_rng(6), max_n=15)
        assert np.allclose(
            score_all(g, (2, 2, 2)).cohesion, score_all(g).cohesion
        )

    def test_mu_averages_over_all_edges(self):
        # one triangle hanging off a path: a2 is zero on the tail edges but
        # they still dilute mu2
        g = make_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        t = score_all(g)
        assert t.mu[1] == pytest.approx(t.a2.sum() / g.edge_count)


class TestAgainstOracle:
    def test_random_graphs_match_brute_force(self):
        rng = np.random.default_rng(1234)
        for _ in range(40):
            g = random_graph(rng)
            t = score_all(g)
            expected = oracles.hop_strengths(g.num_vertices, list(g.edge_pairs()))
            for e, (a1, a2, a3) in enumerate(expected):
                assert t.a1[e] == pytest.approx(a1, rel=1e-12)
                assert t.a2[e] == pytest.approx(a2, rel=1e-12, abs=1e-300)
                assert t.a3[e] == pytest.approx(a3, rel=1e-12, abs=1e-300)

    def test_per_edge_ops_agree_with_table(self):
        rng = np.random.default_rng(99)
        g = random_graph(rng, max_n=18)
        t = score_all(g)
        for e, (u, v) in enumerate(g.edge_pairs()):
            assert single_link_strength(g, (u, v)) == pytest.approx(t.a1[e], rel=1e-12)
            assert double_link_strength(g, (u, v)) == pytest.approx(
                t.a2[e], rel=1e-12, abs=1e-300
            )
            assert triple_link_strength(g, (u, v)) == pytest.approx(
                t.a3[e], rel=1e-12, abs=1e-300
            )


class TestScoreProperties:
    def test_range_and_zero_propagation(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            t = score_all(random_graph(rng))
            for c in (t.c1, t.c2, t.c3, t.cohesion):
                assert np.all(c >= 0) and np.all(c < 1)
            assert np.all(t.c2[t.a2 == 0] == 0)
            assert np.all(t.c3[t.a3 == 0] == 0)

    @pytest.mark.parametrize("n", [4, 5, 7])
    def test_symmetric_graphs_score_uniformly(self, n):
        for g in (complete_graph(n), cycle_graph(n)):
            t = score_all(g)
            assert np.ptp(t.cohesion) == pytest.approx(0.0, abs=1e-15)

    def test_extra_common_neighbor_raises_a2(self):
        """With endpoint degrees held fixed, more triangle support means
        strictly larger a2.

        Both graphs give the scored edge's endpoints degree 2 + r: in the
        first the extra slots point at leaves, in the second one leaf pair is
        rewired into a shared neighbor.
        """
        for r in (1, 2, 3):
            # vertices: 0, 1 scored edge; shared neighbor 2; leaves
            base = [(0, 1), (0, 2), (1, 2)]
            leaves_a = [(0, 3 + i) for i in range(r)] + [
                (1, 3 + r + i) for i in range(r)
            ]
            g_a = make_graph(3 + 2 * r, base + leaves_a)
            # rewire one leaf of each endpoint into a second shared neighbor
            extra = [(0, 3), (1, 3)]
            leaves_b = [(0, 4 + i) for i in range(r - 1)] + [
                (1, 3 + r + i) for i in range(r - 1)
            ]
            g_b = make_graph(3 + 2 * r, base + extra + leaves_b)
            assert g_a.degrees[0] == g_b.degrees[0]
            assert g_a.degrees[1] == g_b.degrees[1]
            a2_a = double_link_strength(g_a, (0, 1))
            a2_b = double_link_strength(g_b, (0, 1))
            assert a2_b > a2_a
