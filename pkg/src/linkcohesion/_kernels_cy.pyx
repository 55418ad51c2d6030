# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: hop strengths, truss peeling, edge betweenness.

Same contracts as ``_kernels_py``; see that module for the reference
semantics.  Inputs are the graph's CSR arrays (int64) and outputs are
freshly allocated numpy arrays.
"""

import numpy as np


def hop_strengths(long long[::1] indptr, long long[::1] indices,
                  long long[::1] degrees, long long[::1] eu, long long[::1] ev):
    cdef Py_ssize_t n_vertices = degrees.shape[0]
    cdef Py_ssize_t n_edges = eu.shape[0]
    a1_arr = np.zeros(n_edges)
    a2_arr = np.zeros(n_edges)
    a3_arr = np.zeros(n_edges)
    if n_edges == 0:
        return a1_arr, a2_arr, a3_arr

    invk2_arr = np.zeros(n_vertices)
    mark_arr = np.zeros(n_vertices, dtype=np.uint8)
    cdef double[::1] a1 = a1_arr
    cdef double[::1] a2 = a2_arr
    cdef double[::1] a3 = a3_arr
    cdef double[::1] invk2 = invk2_arr
    cdef unsigned char[::1] in_nbr = mark_arr

    cdef Py_ssize_t e, i, j, t, s, slot, m, n
    cdef double pref, s2, s3, wm, inner

    for i in range(n_vertices):
        if degrees[i] > 0:
            invk2[i] = 1.0 / (<double>degrees[i] * <double>degrees[i])

    for e in range(n_edges):
        i = eu[e]
        j = ev[e]
        if degrees[i] > degrees[j]:
            t = i; i = j; j = t
        for slot in range(indptr[j], indptr[j + 1]):
            in_nbr[indices[slot]] = 1

        pref = invk2[i] * invk2[j]
        a1[e] = 1.0 / (<double>degrees[i] * <double>degrees[j])

        s2 = 0.0
        s3 = 0.0
        for slot in range(indptr[i], indptr[i + 1]):
            m = indices[slot]
            if in_nbr[m]:
                s2 += invk2[m]
            if m == j:
                continue
            wm = invk2[m]
            inner = 0.0
            for s in range(indptr[m], indptr[m + 1]):
                n = indices[s]
                if n != i and n != j and in_nbr[n]:
                    inner += invk2[n]
            s3 += wm * inner
        a2[e] = pref * s2
        a3[e] = pref * s3

        for slot in range(indptr[j], indptr[j + 1]):
            in_nbr[indices[slot]] = 0

    return a1_arr, a2_arr, a3_arr


def truss_peel(long long[::1] indptr, long long[::1] indices,
               long long[::1] adj_edge_ids, long long[::1] eu, long long[::1] ev):
    cdef Py_ssize_t n_edges = eu.shape[0]
    cdef Py_ssize_t n_vertices = indptr.shape[0] - 1
    truss_arr = np.zeros(n_edges, dtype=np.int64)
    if n_edges == 0:
        return truss_arr

    sup_arr = np.zeros(n_edges, dtype=np.int64)
    alive_arr = np.ones(n_edges, dtype=np.uint8)
    eid_at_arr = np.full(n_vertices, -1, dtype=np.int64)
    mark_arr = np.zeros(n_vertices, dtype=np.uint8)

    cdef long long[::1] trussness = truss_arr
    cdef long long[::1] sup = sup_arr
    cdef unsigned char[::1] alive = alive_arr
    cdef long long[::1] eid_at = eid_at_arr
    cdef unsigned char[::1] in_nbr = mark_arr

    cdef Py_ssize_t e, u, v, t, slot, w, p, pf, pstart
    cdef long long f, f_uw, f_vw, g2
    cdef long long s, sf, level, max_sup

    # initial support: common-neighbor counts
    for e in range(n_edges):
        u = eu[e]
        v = ev[e]
        if indptr[u + 1] - indptr[u] > indptr[v + 1] - indptr[v]:
            t = u; u = v; v = t
        for slot in range(indptr[v], indptr[v + 1]):
            in_nbr[indices[slot]] = 1
        s = 0
        for slot in range(indptr[u], indptr[u + 1]):
            if in_nbr[indices[slot]]:
                s += 1
        sup[e] = s
        for slot in range(indptr[v], indptr[v + 1]):
            in_nbr[indices[slot]] = 0

    # bucket sort edges by support
    max_sup = 0
    for e in range(n_edges):
        if sup[e] > max_sup:
            max_sup = sup[e]
    bin_ptr_arr = np.zeros(max_sup + 2, dtype=np.int64)
    cdef long long[::1] bin_ptr = bin_ptr_arr
    for e in range(n_edges):
        bin_ptr[sup[e] + 1] += 1
    for s in range(1, max_sup + 2):
        bin_ptr[s] += bin_ptr[s - 1]
    order_arr = np.zeros(n_edges, dtype=np.int64)
    pos_arr = np.zeros(n_edges, dtype=np.int64)
    cdef long long[::1] order = order_arr
    cdef long long[::1] pos = pos_arr
    fill_arr = bin_ptr_arr.copy()
    cdef long long[::1] fill = fill_arr
    for e in range(n_edges):
        pos[e] = fill[sup[e]]
        order[pos[e]] = e
        fill[sup[e]] += 1

    level = 0
    for p in range(n_edges):
        e = order[p]
        s = sup[e]
        if s > level:
            level = s
        trussness[e] = level + 2
        alive[e] = 0

        u = eu[e]
        v = ev[e]
        for slot in range(indptr[u], indptr[u + 1]):
            f = adj_edge_ids[slot]
            if alive[f]:
                eid_at[indices[slot]] = f
        for slot in range(indptr[v], indptr[v + 1]):
            w = indices[slot]
            f_uw = eid_at[w]
            f_vw = adj_edge_ids[slot]
            if f_uw >= 0 and alive[f_vw]:
                # triangle (u, v, w): decrement both surviving edges,
                # keeping supports clamped at the current peel level
                for t in range(2):
                    f = f_uw if t == 0 else f_vw
                    if sup[f] > s:
                        sf = sup[f]
                        pf = pos[f]
                        pstart = bin_ptr[sf]
                        g2 = order[pstart]
                        order[pf] = g2
                        order[pstart] = f
                        pos[g2] = pf
                        pos[f] = pstart
                        bin_ptr[sf] = pstart + 1
                        sup[f] = sf - 1
        for slot in range(indptr[u], indptr[u + 1]):
            eid_at[indices[slot]] = -1

    return truss_arr


def brandes_edge_betweenness(long long[::1] indptr, long long[::1] indices,
                             long long[::1] adj_edge_ids, Py_ssize_t n_edges):
    cdef Py_ssize_t n_vertices = indptr.shape[0] - 1
    bet_arr = np.zeros(n_edges)
    if n_edges == 0 or n_vertices == 0:
        return bet_arr

    cdef Py_ssize_t n_slots = indices.shape[0]
    dist_arr = np.full(n_vertices, -1, dtype=np.int64)
    sigma_arr = np.zeros(n_vertices)
    delta_arr = np.zeros(n_vertices)
    queue_arr = np.zeros(n_vertices, dtype=np.int64)
    pred_vert_arr = np.zeros(n_slots, dtype=np.int64)
    pred_eid_arr = np.zeros(n_slots, dtype=np.int64)
    pred_cnt_arr = np.zeros(n_vertices, dtype=np.int64)

    cdef double[::1] bet = bet_arr
    cdef long long[::1] dist = dist_arr
    cdef double[::1] sigma = sigma_arr
    cdef double[::1] delta = delta_arr
    cdef long long[::1] queue = queue_arr
    cdef long long[::1] pred_vert = pred_vert_arr
    cdef long long[::1] pred_eid = pred_eid_arr
    cdef long long[::1] pred_cnt = pred_cnt_arr

    cdef Py_ssize_t s, v, w, slot, head, tail, idx, c, base
    cdef double coef, contrib

    for s in range(n_vertices):
        head = 0
        tail = 0
        dist[s] = 0
        sigma[s] = 1.0
        queue[tail] = s
        tail += 1
        while head < tail:
            v = queue[head]
            head += 1
            for slot in range(indptr[v], indptr[v + 1]):
                w = indices[slot]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue[tail] = w
                    tail += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    pred_vert[indptr[w] + pred_cnt[w]] = v
                    pred_eid[indptr[w] + pred_cnt[w]] = adj_edge_ids[slot]
                    pred_cnt[w] += 1
        for idx in range(tail - 1, -1, -1):
            w = queue[idx]
            coef = (1.0 + delta[w]) / sigma[w]
            base = indptr[w]
            for c in range(pred_cnt[w]):
                v = pred_vert[base + c]
                contrib = sigma[v] * coef
                bet[pred_eid[base + c]] += contrib
                delta[v] += contrib
        for idx in range(tail):
            v = queue[idx]
            dist[v] = -1
            sigma[v] = 0.0
            delta[v] = 0.0
            pred_cnt[v] = 0

    bet_arr *= 0.5
    return bet_arr
