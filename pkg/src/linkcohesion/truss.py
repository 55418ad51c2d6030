"""k-truss decomposition and maximal-community truss-finding.

A k-truss keeps the edges supported by at least k-2 triangles inside the
surviving subgraph; trussness is the largest k an edge survives to.  The
community finder scans triangle-supported levels (k >= 3), counts the
edge-bearing connected clusters of each level's subgraph, and picks the
level with the most clusters, breaking ties toward the lower level so the
result covers a larger part of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .graph import CommunityAssignment, Graph, _UnionFind, connected_components, _open_text

# k = 2 admits every edge and k = 3 any lone triangle, so neither level
# separates communities; the scan starts where edges need two supporting
# triangles.  A graph whose trussness never reaches this level yields zero
# communities (and an undefined F-score downstream).
MIN_COMMUNITY_LEVEL = 4


@dataclass(frozen=True)
class TrussResult:
    """Trussness per edge, cluster counts per level, and the chosen level.

    ``chosen_level`` is None when no scanned level has an edge (graph has no
    triangles); ``labels`` then leaves every vertex unlabeled.
    """

    trussness: np.ndarray
    level_clusters: dict[int, int]
    chosen_level: int | None
    labels: CommunityAssignment

    @property
    def cluster_count(self) -> int:
        if self.chosen_level is None:
            return 0
        return self.level_clusters[self.chosen_level]


def truss_decomposition(g: Graph) -> np.ndarray:
    """Per-edge trussness (>= 2) by ascending-support peeling."""
    return _backend.truss_peel(
        g.indptr, g.indices, g.adj_edge_ids, g.edges_u, g.edges_v
    )


def maximal_community_truss(g: Graph, *, min_level: int = MIN_COMMUNITY_LEVEL) -> TrussResult:
    """Choose the truss level whose subgraph has the most clusters.

    Clusters are connected components with at least one edge; isolated
    vertices never count.  Levels are scanned from ``min_level`` up to the
    maximum trussness, merging level subgraphs incrementally from the top
    so the whole scan is near-linear.
    """
    if g.edge_count == 0:
        raise ValueError("truss communities need at least one edge")
    trussness = truss_decomposition(g)
    k_max = int(trussness.max())

    level_clusters: dict[int, int] = {}
    uf = _UnionFind(g.num_vertices)
    covered = np.zeros(g.num_vertices, dtype=bool)
    count = 0
    by_level = [np.flatnonzero(trussness == k) for k in range(0, k_max + 1)]
    for k in range(k_max, min_level - 1, -1):
        for eid in by_level[k]:
            u, v = int(g.edges_u[eid]), int(g.edges_v[eid])
            for w in (u, v):
                if not covered[w]:
                    covered[w] = True
                    count += 1
            if uf.union(u, v):
                count -= 1
        level_clusters[k] = count

    chosen: int | None = None
    best = 0
    for k in sorted(level_clusters):
        if level_clusters[k] > best:
            best = level_clusters[k]
            chosen = k

    if chosen is None:
        labels = CommunityAssignment(
            np.full(g.num_vertices, -1, dtype=np.int64), 0
        )
        return TrussResult(trussness, level_clusters, None, labels)

    comps = connected_components(g, trussness >= chosen)
    labels = CommunityAssignment(comps.labels, comps.count)
    return TrussResult(trussness, level_clusters, chosen, labels)


def write_level_clusters(result: TrussResult, dest) -> None:
    with _open_text(dest, "w") as fh:
        fh.write("k,cluster_count\n")
        for k in sorted(result.level_clusters):
            fh.write(f"{k},{result.level_clusters[k]}\n")


def write_truss_communities(result: TrussResult, g: Graph, dest) -> None:
    """Per-vertex 'vertex,community' rows (external ids) for the chosen level."""
    with _open_text(dest, "w") as fh:
        fh.write("vertex,community\n")
        for v in np.flatnonzero(result.labels.labels >= 0):
            fh.write(f"{g.ext_ids[v]},{result.labels.labels[v]}\n")
