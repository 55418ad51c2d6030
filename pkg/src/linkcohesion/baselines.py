"""Comparison methods: local similarity sparsification and edge betweenness."""

from __future__ import annotations

import math

import numpy as np

from . import _backend
from .graph import Graph, _open_text


def jaccard_similarity(g: Graph, edge: tuple[int, int]) -> float:
    """Jaccard overlap of the endpoints' open neighborhoods."""
    u, v = edge
    g.require_edge_id(u, v)
    nu, nv = g.neighbors(u), g.neighbors(v)
    inter = np.intersect1d(nu, nv, assume_unique=True).size
    union = nu.size + nv.size - inter
    return inter / union if union else 0.0


def jaccard_all(g: Graph) -> np.ndarray:
    """Per-edge neighborhood similarity, indexed by edge id."""
    sims = np.zeros(g.edge_count)
    in_nbr = np.zeros(g.num_vertices, dtype=bool)
    for e in range(g.edge_count):
        u, v = int(g.edges_u[e]), int(g.edges_v[e])
        nu, nv = g.neighbors(u), g.neighbors(v)
        in_nbr[nv] = True
        inter = int(in_nbr[nu].sum())
        in_nbr[nv] = False
        union = nu.size + nv.size - inter
        sims[e] = inter / union if union else 0.0
    return sims


def sparsify_local(g: Graph, exponent: float = 0.5) -> Graph:
    """Similarity sparsification with per-vertex local retention.

    Each vertex of degree d marks its ceil(d**exponent) most similar
    incident edges (ties broken by canonical edge order); an edge survives
    when either endpoint marks it.
    """
    if not 0.0 < exponent <= 1.0:
        raise ValueError("exponent must lie in (0, 1]")
    if g.edge_count == 0:
        return g.subgraph_with_edges(np.zeros(0, dtype=bool))
    sims = jaccard_all(g)
    keep = np.zeros(g.edge_count, dtype=bool)
    for v in range(g.num_vertices):
        eids = g.incident_edge_ids(v)
        if eids.size == 0:
            continue
        quota = math.ceil(eids.size**exponent)
        # edge ids ascend in canonical order, so they are the tiebreak key
        ranked = eids[np.lexsort((eids, -sims[eids]))]
        keep[ranked[:quota]] = True
    return g.subgraph_with_edges(keep)


def edge_betweenness(g: Graph) -> np.ndarray:
    """Exact per-edge betweenness (each unordered vertex pair counted once)."""
    return _backend.brandes_edge_betweenness(
        g.indptr, g.indices, g.adj_edge_ids, g.edge_count
    )


def write_edge_values_csv(g: Graph, values: np.ndarray, name: str, dest) -> None:
    """CSV rows u,v,<name> with external ids."""
    if values.size != g.edge_count:
        raise ValueError("value array does not match graph edge set")
    with _open_text(dest, "w") as fh:
        fh.write(f"u,v,{name}\n")
        for e, (u, v) in enumerate(g.edge_pairs()):
            fh.write(f"{g.ext_ids[u]},{g.ext_ids[v]},{values[e]:.12g}\n")
