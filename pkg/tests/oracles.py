"""Brute-force reference implementations, independent of the package kernels.

Everything here favors obviousness over speed: explicit set arithmetic,
all-paths enumeration, whole-subgraph recomputation.  Tests freeze expected
values computed by these against the optimized code paths.
"""

from collections import deque

import numpy as np


def adjacency_sets(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def hop_strengths(n, edges):
    """Naive enumeration of (a1, a2, a3) per edge.

    a2 scans every vertex as a potential common neighbor; a3 walks every
    i-m-n-j combination and keeps those whose three hops are edges and whose
    intermediates avoid the endpoints.
    """
    adj = adjacency_sets(n, edges)
    deg = [len(a) for a in adj]
    out = []
    for i, j in edges:
        a1 = 1.0 / (deg[i] * deg[j])
        pref = a1 * a1
        a2 = pref * sum(
            1.0 / deg[l] ** 2 for l in range(n) if l in adj[i] and l in adj[j]
        )
        paths = 0.0
        for m in range(n):
            if m in (i, j) or m not in adj[i]:
                continue
            for q in range(n):
                if q in (i, j) or q == m:
                    continue
                if q in adj[m] and j in adj[q]:
                    paths += 1.0 / (deg[m] * deg[q]) ** 2
        out.append((a1, a2, pref * paths))
    return out


def trussness_fixed_point(n, edges):
    """Trussness by recomputing each k-truss from scratch until stable."""
    canonical = [(min(u, v), max(u, v)) for u, v in edges]
    truss = {e: 2 for e in canonical}
    alive = set(canonical)
    k = 3
    while alive:
        cur = set(alive)
        while True:
            adj = [set() for _ in range(n)]
            for u, v in cur:
                adj[u].add(v)
                adj[v].add(u)
            drop = [(u, v) for u, v in cur if len(adj[u] & adj[v]) < k - 2]
            if not drop:
                break
            cur -= set(drop)
        for e in cur:
            truss[e] = k
        alive = cur
        k += 1
    return truss


def edge_betweenness_pairs(n, edges):
    """Betweenness from all-pairs shortest-path counting (no accumulation).

    For each unordered pair (s, t), an edge (u, v) carries
    sigma_s[u] * sigma_t[v] shortest paths when it sits at the right depth;
    contributions are fractions of sigma_s[t].
    """
    adj = adjacency_sets(n, edges)

    def bfs(s):
        dist = [-1] * n
        sigma = [0.0] * n
        dist[s] = 0
        sigma[s] = 1.0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    q.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
        return dist, sigma

    alls = [bfs(s) for s in range(n)]
    bet = np.zeros(len(edges))
    for s in range(n):
        ds, ss = alls[s]
        for t in range(s + 1, n):
            if ds[t] < 0:
                continue
            dt, st = alls[t]
            total = ss[t]
            for e, (u, v) in enumerate(edges):
                through = 0.0
                if ds[u] >= 0 and dt[v] >= 0 and ds[u] + 1 + dt[v] == ds[t]:
                    through += ss[u] * st[v]
                if ds[v] >= 0 and dt[u] >= 0 and ds[v] + 1 + dt[u] == ds[t]:
                    through += ss[v] * st[u]
                if through:
                    bet[e] += through / total
    return bet


def density_from_scratch(g, cohesion, active_mask):
    """rho recomputed directly from the active edge subset."""
    active = np.flatnonzero(active_mask)
    if active.size == 0:
        return 0.0
    touched = set()
    for eid in active:
        touched.add(int(g.edges_u[eid]))
        touched.add(int(g.edges_v[eid]))
    return len(touched) * float(np.mean([cohesion[e] for e in active]))


def random_edge_set(rng, n, p):
    """Plain G(n, p) edge list."""
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j))
    return edges
