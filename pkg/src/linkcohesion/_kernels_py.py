"""NumPy fallback for the hot kernels.

Mirrors the signatures of the compiled module ``_kernels_cy``; the backend
selector picks whichever is available.  All functions take the graph's CSR
arrays (indptr/indices, per-slot edge ids) plus the canonical edge endpoint
arrays, and return per-edge numpy arrays.
"""

from __future__ import annotations

import heapq
from collections import deque

import numpy as np


def hop_strengths(indptr, indices, degrees, eu, ev):
    """1-, 2-, and 3-hop strengths for every edge.

    For edge (i, j): a1 = 1/(ki*kj); a2 sums 1/kl^2 over common neighbors l;
    a3 sums 1/(km*kn)^2 over ordered paths i-m-n-j that avoid revisiting the
    endpoints.  Both a2/a3 carry the 1/(ki*kj)^2 prefactor.
    """
    n_edges = eu.shape[0]
    n_vertices = degrees.shape[0]
    a1 = np.zeros(n_edges)
    a2 = np.zeros(n_edges)
    a3 = np.zeros(n_edges)
    if n_edges == 0:
        return a1, a2, a3

    invk2 = np.zeros(n_vertices)
    nz = degrees > 0
    invk2[nz] = 1.0 / (degrees[nz].astype(np.float64) ** 2)
    in_nbr = np.zeros(n_vertices, dtype=bool)

    for e in range(n_edges):
        i, j = int(eu[e]), int(ev[e])
        if degrees[i] > degrees[j]:
            i, j = j, i  # enumerate from the lower-degree endpoint
        nj = indices[indptr[j] : indptr[j + 1]]
        ni = indices[indptr[i] : indptr[i + 1]]
        in_nbr[nj] = True

        pref = invk2[i] * invk2[j]
        a1[e] = 1.0 / (degrees[i] * degrees[j])
        common = ni[in_nbr[ni]]
        if common.size:
            a2[e] = pref * invk2[common].sum()

        ms = ni[ni != j]
        if ms.size:
            starts = indptr[ms]
            counts = (indptr[ms + 1] - starts).astype(np.int64)
            total = int(counts.sum())
            if total:
                # flatten each m's adjacency slice into one gather
                offs = np.repeat(starts - np.concatenate(
                    ([0], np.cumsum(counts)[:-1])), counts)
                ns = indices[offs + np.arange(total)]
                wm = np.repeat(invk2[ms], counts)
                ok = in_nbr[ns] & (ns != i) & (ns != j)
                if ok.any():
                    a3[e] = pref * (wm[ok] * invk2[ns[ok]]).sum()

        in_nbr[nj] = False
    return a1, a2, a3


def _edge_supports(indptr, indices, adj_edge_ids, eu, ev):
    """Triangles-per-edge counts via neighbor-mark intersection."""
    n_edges = eu.shape[0]
    n_vertices = indptr.shape[0] - 1
    sup = np.zeros(n_edges, dtype=np.int64)
    in_nbr = np.zeros(n_vertices, dtype=bool)
    for e in range(n_edges):
        u, v = int(eu[e]), int(ev[e])
        nu = indices[indptr[u] : indptr[u + 1]]
        nv = indices[indptr[v] : indptr[v + 1]]
        if nu.size > nv.size:
            nu, nv = nv, nu
        in_nbr[nv] = True
        sup[e] = int(in_nbr[nu].sum())
        in_nbr[nv] = False
    return sup


def truss_peel(indptr, indices, adj_edge_ids, eu, ev):
    """Per-edge trussness by peeling edges in ascending current support.

    Uses a lazy heap: each support decrement pushes a fresh entry and stale
    entries are skipped on pop.  Trussness of an edge removed at running
    peel level k is k + 2.
    """
    n_edges = eu.shape[0]
    trussness = np.zeros(n_edges, dtype=np.int64)
    if n_edges == 0:
        return trussness

    n_vertices = indptr.shape[0] - 1
    sup = _edge_supports(indptr, indices, adj_edge_ids, eu, ev)
    alive = np.ones(n_edges, dtype=bool)
    heap = [(int(s), e) for e, s in enumerate(sup)]
    heapq.heapify(heap)
    eid_at = np.full(n_vertices, -1, dtype=np.int64)

    level = 0
    removed = 0
    while removed < n_edges:
        s, e = heapq.heappop(heap)
        if not alive[e] or s != sup[e]:
            continue
        level = max(level, s)
        trussness[e] = level + 2
        alive[e] = False
        removed += 1

        u, v = int(eu[e]), int(ev[e])
        for slot in range(indptr[u], indptr[u + 1]):
            f = adj_edge_ids[slot]
            if alive[f]:
                eid_at[indices[slot]] = f
        for slot in range(indptr[v], indptr[v + 1]):
            w = indices[slot]
            f_uw = eid_at[w]
            f_vw = adj_edge_ids[slot]
            if f_uw >= 0 and alive[f_vw]:
                for f in (int(f_uw), int(f_vw)):
                    if sup[f] > s:
                        sup[f] -= 1
                        heapq.heappush(heap, (int(sup[f]), f))
        for slot in range(indptr[u], indptr[u + 1]):
            eid_at[indices[slot]] = -1
    return trussness


def brandes_edge_betweenness(indptr, indices, adj_edge_ids, n_edges):
    """Exact edge betweenness by BFS dependency accumulation per source.

    Per-source contributions are summed over all sources and halved so each
    unordered vertex pair counts once.
    """
    n_vertices = indptr.shape[0] - 1
    bet = np.zeros(n_edges)
    if n_edges == 0 or n_vertices == 0:
        return bet

    dist = np.full(n_vertices, -1, dtype=np.int64)
    sigma = np.zeros(n_vertices)
    delta = np.zeros(n_vertices)

    for s in range(n_vertices):
        preds: list[list[tuple[int, int]]] = [[] for _ in range(n_vertices)]
        visit_order = []
        dist[s] = 0
        sigma[s] = 1.0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            visit_order.append(v)
            dv = dist[v]
            for slot in range(indptr[v], indptr[v + 1]):
                w = int(indices[slot])
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sigma[v]
                    preds[w].append((v, int(adj_edge_ids[slot])))
        for w in reversed(visit_order):
            coef = (1.0 + delta[w]) / sigma[w]
            for v, eid in preds[w]:
                c = sigma[v] * coef
                bet[eid] += c
                delta[v] += c
        for v in visit_order:
            dist[v] = -1
            sigma[v] = 0.0
            delta[v] = 0.0
    bet *= 0.5
    return bet
