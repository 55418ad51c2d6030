"""Cohesion density and the maximum-density-core (MDCore) pruning sweep.

Density rho multiplies the number of non-isolated vertices by the mean
cohesion of the surviving edges.  The sweep deletes edges in ascending
cohesion order, tracks rho after every removal, and keeps the shortest
prefix of removals that attains the global maximum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cohesion import EdgeScoreTable
from .graph import Graph, _as_edge_mask, _open_text


@dataclass(frozen=True)
class DensityCurve:
    """rho after t removals for t = 0..E, plus the best prefix."""

    rho: np.ndarray
    removal_order: np.ndarray
    best_removed: int
    best_rho: float

    def points(self):
        return enumerate(self.rho.tolist())


def density(g: Graph, scores: EdgeScoreTable, active_edges=None) -> float:
    """rho = (#vertices with an active incident edge) * mean active cohesion."""
    _check_scores(g, scores)
    mask = _as_edge_mask(g, active_edges)
    n_active = int(mask.sum())
    if n_active == 0:
        return 0.0
    touched = np.zeros(g.num_vertices, dtype=bool)
    touched[g.edges_u[mask]] = True
    touched[g.edges_v[mask]] = True
    return float(touched.sum()) * float(scores.cohesion[mask].mean())


def mdcore_sweep(g: Graph, scores: EdgeScoreTable) -> DensityCurve:
    """Evaluate rho after every prefix of ascending-cohesion removals.

    Ties in cohesion break by canonical (u, v) edge order, so the sweep is
    deterministic.  Among prefixes attaining the maximum rho the shortest
    one wins, keeping as many edges as possible.
    """
    _check_scores(g, scores)
    n_edges = g.edge_count
    order = np.lexsort((g.edges_v, g.edges_u, scores.cohesion))

    # removal step after which each vertex goes isolated = position of its
    # last incident edge in the removal order
    pos_of_edge = np.empty(n_edges, dtype=np.int64)
    pos_of_edge[order] = np.arange(n_edges, dtype=np.int64)
    last_pos = np.full(g.num_vertices, -1, dtype=np.int64)
    np.maximum.at(last_pos, g.edges_u, pos_of_edge)
    np.maximum.at(last_pos, g.edges_v, pos_of_edge)

    covered = last_pos >= 0
    vc = np.full(n_edges + 1, int(covered.sum()), dtype=np.int64)
    drops = np.bincount(last_pos[covered] + 1, minlength=n_edges + 1)
    vc -= np.cumsum(drops[: n_edges + 1])

    removed_sum = np.concatenate(([0.0], np.cumsum(scores.cohesion[order])))
    remaining = np.arange(n_edges, -1, -1, dtype=np.float64)
    rho = np.zeros(n_edges + 1)
    head = remaining > 0
    rho[head] = vc[head] * (removed_sum[-1] - removed_sum[head]) / remaining[head]

    best_removed = int(np.argmax(rho))  # argmax takes the smallest index
    return DensityCurve(rho, order, best_removed, float(rho[best_removed]))


def prune(g: Graph, scores: EdgeScoreTable) -> Graph:
    """Subgraph keeping the best sweep prefix; vertices are all retained."""
    curve = mdcore_sweep(g, scores)
    keep = np.ones(g.edge_count, dtype=bool)
    keep[curve.removal_order[: curve.best_removed]] = False
    return g.subgraph_with_edges(keep)


def write_density_curve(curve: DensityCurve, dest) -> None:
    with _open_text(dest, "w") as fh:
        fh.write("removed_count,rho\n")
        for t, r in curve.points():
            fh.write(f"{t},{r:.12g}\n")


def _check_scores(g: Graph, scores: EdgeScoreTable) -> None:
    if scores.edge_count != g.edge_count:
        raise ValueError(
            f"score table covers {scores.edge_count} edges, "
            f"graph has {g.edge_count}"
        )
