"""Compiled differential checks for the dynamic forests.

A seeded random script of edge insertions and deletions runs through the
hierarchy. After every operation the result is compared with a BFS
partition, a Kruskal forest and forest path scans computed from scratch.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from . import _hdt as hd

CHECK_OK, CHECK_CONN, CHECK_MSF, CHECK_PATHMAX = range(4)


@njit(cache=True)
def _uf_find(P, x):
    while P[x] != x:
        P[x] = P[P[x]]
        x = P[x]
    return x


@njit(cache=True)
def _bfs_labels(n, m, EU2, EV2, live, n_live, label, head, nxt, to, queue):
    for v in range(n):
        head[v] = -1
        label[v] = -1
    k = 0
    for t in range(n_live):
        h = live[t]
        a = EU2[h]
        b = EV2[h]
        to[k] = b
        nxt[k] = head[a]
        head[a] = k
        k += 1
        to[k] = a
        nxt[k] = head[b]
        head[b] = k
        k += 1
    for s in range(n):
        if label[s] != -1:
            continue
        label[s] = s
        qh = 0
        qt = 0
        queue[qt] = s
        qt += 1
        while qh < qt:
            x = queue[qh]
            qh += 1
            e = head[x]
            while e != -1:
                y = to[e]
                if label[y] == -1:
                    label[y] = s
                    queue[qt] = y
                    qt += 1
                e = nxt[e]


@njit(cache=True)
def _run_checked(st, n, n_ops, seed, msf, target_edges, random_weight_frac, queries):
    np.random.seed(seed)
    T = st[0]
    E = st[1]
    EU2 = np.zeros(n_ops + 1, dtype=np.int64)
    EV2 = np.zeros(n_ops + 1, dtype=np.int64)
    EW2 = np.zeros(n_ops + 1, dtype=np.int64)
    live = np.zeros(n_ops + 1, dtype=np.int64)
    n_live = 0
    n_handles = 0
    label = np.zeros(n, dtype=np.int64)
    head = np.zeros(n, dtype=np.int64)
    nxt = np.zeros(2 * (n_ops + 1), dtype=np.int64)
    to = np.zeros(2 * (n_ops + 1), dtype=np.int64)
    queue = np.zeros(n, dtype=np.int64)
    r2l = np.full(T.shape[0], -1, dtype=np.int64)
    l2r = np.full(n, -1, dtype=np.int64)
    P = np.zeros(n, dtype=np.int64)
    intree = np.zeros(n_ops + 1, dtype=np.int8)
    fhead = np.zeros(n, dtype=np.int64)
    fnxt = np.zeros(2 * n, dtype=np.int64)
    fto = np.zeros(2 * n, dtype=np.int64)
    fw = np.zeros(2 * n, dtype=np.int64)
    best = np.zeros(n, dtype=np.int64)
    seen = np.zeros(n, dtype=np.int8)
    wts = np.zeros(n_ops + 1, dtype=np.int64)
    for op in range(n_ops):
        p_ins = 0.6 if n_live < target_edges else 0.4
        if n_live == 0 or np.random.random() < p_ins:
            u = np.random.randint(0, n)
            v = np.random.randint(0, n)
            h = n_handles
            n_handles += 1
            w = op + 1
            if msf and np.random.random() < random_weight_frac:
                w = -(op + 1)
            EU2[h] = u
            EV2[h] = v
            EW2[h] = w
            hd.hdt_insert(st, h, u, v, w)
            live[n_live] = h
            n_live += 1
        else:
            t = np.random.randint(0, n_live)
            h = live[t]
            live[t] = live[n_live - 1]
            n_live -= 1
            hd.hdt_delete(st, h)

        # connectivity against BFS
        _bfs_labels(n, n_live, EU2, EV2, live, n_live, label, head, nxt, to, queue)
        for v in range(n):
            l2r[v] = -1
        for v in range(n):
            r = hd.hdt_find(st, v)
            r2l[r] = -1
        for v in range(n):
            r = hd.hdt_find(st, v)
            lab = label[v]
            if r2l[r] == -1 and l2r[lab] == -1:
                r2l[r] = lab
                l2r[lab] = r
            elif r2l[r] != lab or l2r[lab] != r:
                return CHECK_CONN, op
        if not msf:
            continue

        # tree edges against Kruskal
        for t in range(n_live):
            wts[t] = EW2[live[t]]
        order = np.argsort(wts[:n_live])
        for v in range(n):
            P[v] = v
            fhead[v] = -1
        k = 0
        for t in range(n_live):
            h = live[order[t]]
            a = _uf_find(P, EU2[h])
            b = _uf_find(P, EV2[h])
            if a != b:
                P[a] = b
                intree[h] = 1
                x = EU2[h]
                y = EV2[h]
                fto[k] = y
                fw[k] = EW2[h]
                fnxt[k] = fhead[x]
                fhead[x] = k
                k += 1
                fto[k] = x
                fw[k] = EW2[h]
                fnxt[k] = fhead[y]
                fhead[y] = k
                k += 1
            else:
                intree[h] = 0
        for t in range(n_live):
            h = live[t]
            if (E[h, hd.ESTATUS] == hd.TREE) != (intree[h] == 1):
                return CHECK_MSF, op

        # path maxima from a random source against a forest scan
        s = np.random.randint(0, n)
        for v in range(n):
            seen[v] = 0
        seen[s] = 1
        best[s] = hd.NEG
        qh = 0
        qt = 0
        queue[qt] = s
        qt += 1
        while qh < qt:
            x = queue[qh]
            qh += 1
            e = fhead[x]
            while e != -1:
                y = fto[e]
                if seen[y] == 0:
                    seen[y] = 1
                    best[y] = fw[e] if fw[e] > best[x] else best[x]
                    queue[qt] = y
                    qt += 1
                e = fnxt[e]
        for _ in range(queries):
            v = np.random.randint(0, n)
            if seen[v] == 0 or v == s:
                continue
            if hd.hdt_path_max(st, s, v) != best[v]:
                return CHECK_PATHMAX, op
    return CHECK_OK, -1


def run_checked_script(n: int, n_ops: int, seed: int, *, msf: bool, target_edges: int = 128,
                       random_weight_frac: float = 0.02, queries: int = 8) -> tuple[int, int]:
    """Run one checked script; return ``(status, failing op or -1)``."""
    st = hd.new_state(n, n_ops + 1, msf, seed)
    status, op = _run_checked(st, n, n_ops, seed, msf, target_edges, random_weight_frac, queries)
    return int(status), int(op)
