"""Link-cohesion edge scores from 1-, 2-, and 3-hop path strengths.

Every edge gets three raw hop strengths (direct link, triangles,
quadrilateral paths), each valuing a supporting path by the inverse of its
likelihood under the endpoint/corner degrees.  Raw strengths are normalized
against their graph-wide mean into [0, 1) and combined into a single
weighted score.  Scores are computed once on the input graph; pruning never
rescales them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .graph import Graph, _open_text

DEFAULT_WEIGHTS = (1.0, 1.0, 1.0)


@dataclass(frozen=True)
class EdgeScoreTable:
    """Per-edge hop strengths, normalized strengths, and aggregate cohesion.

    Arrays are indexed by the graph's edge ids.  ``mu`` holds the per-hop
    mean strengths (over all edges, zeros included); ``weights`` is the
    aggregation weighting after validation.
    """

    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    c3: np.ndarray
    cohesion: np.ndarray
    mu: tuple[float, float, float]
    weights: tuple[float, float, float]

    @property
    def edge_count(self) -> int:
        return int(self.cohesion.size)


def single_link_strength(g: Graph, edge: tuple[int, int]) -> float:
    """Direct-connection strength 1/(ki*kj)."""
    u, v = edge
    g.require_edge_id(u, v)
    return 1.0 / (int(g.degrees[u]) * int(g.degrees[v]))


def double_link_strength(g: Graph, edge: tuple[int, int]) -> float:
    """Triangle support: (1/(ki*kj)^2) * sum over common neighbors of 1/kl^2."""
    u, v = edge
    g.require_edge_id(u, v)
    common = np.intersect1d(g.neighbors(u), g.neighbors(v), assume_unique=True)
    if common.size == 0:
        return 0.0
    k = g.degrees[common].astype(np.float64)
    pref = 1.0 / (int(g.degrees[u]) * int(g.degrees[v])) ** 2
    return float(pref * (1.0 / (k * k)).sum())


def triple_link_strength(g: Graph, edge: tuple[int, int]) -> float:
    """Quadrilateral support over ordered 3-hop paths i-m-n-j.

    A path qualifies when all three hops are edges and neither intermediate
    revisits an endpoint; both orientations count when both exist.
    """
    i, j = edge
    g.require_edge_id(i, j)
    deg = g.degrees
    total = 0.0
    for m in g.neighbors(i):
        if m == j:
            continue
        for n in g.neighbors(int(m)):
            if n == i or n == j:
                continue
            if g.has_edge(int(n), j):
                total += 1.0 / (int(deg[m]) * int(deg[n])) ** 2
    pref = 1.0 / (int(deg[i]) * int(deg[j])) ** 2
    return pref * total


def score_all(g: Graph, weights=DEFAULT_WEIGHTS) -> EdgeScoreTable:
    """Score every edge of ``g``.

    Weights are arbitrary non-negative reals (not all zero), normalized by
    their sum; the default (1, 1, 1) averages the three normalized
    strengths equally.  The result is independent of edge iteration order.
    """
    if g.edge_count == 0:
        raise ValueError("cohesion scores need at least one edge")
    w = tuple(float(x) for x in weights)
    if len(w) != 3 or any(x < 0 for x in w):
        raise ValueError("weights must be three non-negative reals")
    wsum = sum(w)
    if wsum <= 0:
        raise ValueError("weights must not all be zero")

    a1, a2, a3 = _backend.hop_strengths(
        g.indptr, g.indices, g.degrees, g.edges_u, g.edges_v
    )
    cs = []
    mus = []
    for a in (a1, a2, a3):
        mu = float(a.mean())
        denom = mu + a
        c = np.divide(a, denom, out=np.zeros_like(a), where=denom > 0)
        mus.append(mu)
        cs.append(c)
    c1, c2, c3 = cs
    cohesion = (w[0] * c1 + w[1] * c2 + w[2] * c3) / wsum
    return EdgeScoreTable(a1, a2, a3, c1, c2, c3, cohesion, tuple(mus), w)


def write_scores_csv(g: Graph, table: EdgeScoreTable, dest) -> None:
    """CSV rows u,v,a1,a2,a3,c1,c2,c3,cohesion with external ids."""
    if table.edge_count != g.edge_count:
        raise ValueError("score table does not match graph edge set")
    with _open_text(dest, "w") as fh:
        fh.write("u,v,a1,a2,a3,c1,c2,c3,cohesion\n")
        for e, (u, v) in enumerate(g.edge_pairs()):
            fh.write(
                f"{g.ext_ids[u]},{g.ext_ids[v]},"
                f"{table.a1[e]:.12g},{table.a2[e]:.12g},{table.a3[e]:.12g},"
                f"{table.c1[e]:.12g},{table.c2[e]:.12g},{table.c3[e]:.12g},"
                f"{table.cohesion[e]:.12g}\n"
            )


def read_scores_csv(g: Graph, source) -> EdgeScoreTable:
    """Load a table written by write_scores_csv back against ``g``.

    Every edge of the graph must appear exactly once; external ids are
    matched through the graph's id map.
    """
    cols = np.full((7, g.edge_count), np.nan)
    seen = np.zeros(g.edge_count, dtype=bool)
    with _open_text(source, "r") as fh:
        header = fh.readline().strip()
        if header != "u,v,a1,a2,a3,c1,c2,c3,cohesion":
            raise ValueError(f"unexpected score CSV header: {header!r}")
        for line_no, raw in enumerate(fh, start=2):
            line = raw.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 9:
                raise ValueError(f"line {line_no}: expected 9 columns")
            try:
                u = g.vertex_id(parts[0])
                v = g.vertex_id(parts[1])
            except KeyError as exc:
                raise ValueError(f"line {line_no}: unknown vertex {exc}") from None
            eid = g.require_edge_id(u, v)
            if seen[eid]:
                raise ValueError(f"line {line_no}: duplicate edge {parts[0]},{parts[1]}")
            seen[eid] = True
            cols[:, eid] = [float(x) for x in parts[2:]]
    if not seen.all():
        raise ValueError(f"score CSV covers {int(seen.sum())} of {g.edge_count} edges")
    a1, a2, a3, c1, c2, c3, cohesion = cols
    mu = (float(a1.mean()), float(a2.mean()), float(a3.mean()))
    return EdgeScoreTable(a1, a2, a3, c1, c2, c3, cohesion, mu, DEFAULT_WEIGHTS)
