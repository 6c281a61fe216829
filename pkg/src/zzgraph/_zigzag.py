"""Compiled per-arrow drivers for the dimension-0 and dimension-1 algorithms.

Both read the integer op table of a :class:`~zzgraph.script.GraphScript`.
Intervals go to ``OUT`` and their count to ``OM[0]``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from . import _forest as fo
from . import _hdt as hd

NOOP, ADDV, DELV, ADDE, DELE = range(5)

OK = 0
ERR_NO_PARTNER = 1
ERR_BAD_OP = 2

# OM slots
OM_COUNT, OM_USIZE, OM_FAIL = range(3)
OM_FIELDS = 3


# dimension 0: forest leaf of each component, indexed by level-0 treap root


@njit(cache=True)
def z0_load_initial(st, F, FM, PHI, verts, edges):
    """Load ``G_0``: every initial component gets a root at level 0."""
    T = st[0]
    for k in range(edges.shape[0]):
        hd.hdt_insert(st, edges[k, 2], edges[k, 0], edges[k, 1], edges[k, 2])
    for k in range(verts.shape[0]):
        r = hd.t_root(T, verts[k])
        if PHI[r] == -1:
            PHI[r] = fo.f_enter(F, FM, 0)


@njit(cache=True)
def z0_step(st, F, FM, FB, PHI, OUT, OM, op, a, b, h, k):
    T = st[0]
    if op == NOOP:
        return OK
    if op == ADDV:
        PHI[hd.t_root(T, a)] = fo.f_enter(F, FM, k)
        return OK
    if op == DELV:
        birth, _ = fo.f_depart(F, FM, PHI[hd.t_root(T, a)])
        c = OM[OM_COUNT]
        OUT[c, 0] = birth
        OUT[c, 1] = k - 1
        OM[OM_COUNT] = c + 1
        return OK
    if op == ADDE:
        t1 = hd.t_root(T, a)
        t2 = hd.t_root(T, b)
        l1 = PHI[t1]
        l2 = PHI[t2]
        hd.hdt_insert(st, h, a, b, h)
        if t1 == t2:
            PHI[hd.t_root(T, a)] = l1
            return OK
        birth, leaf, _ = fo.f_merge(F, FM, FB, l1, l2)
        PHI[hd.t_root(T, a)] = leaf
        c = OM[OM_COUNT]
        OUT[c, 0] = birth
        OUT[c, 1] = k - 1
        OM[OM_COUNT] = c + 1
        return OK
    if op == DELE:
        leaf = PHI[hd.t_root(T, a)]
        hd.hdt_delete(st, h)
        ra = hd.t_root(T, a)
        rb = hd.t_root(T, b)
        if ra == rb:
            PHI[ra] = leaf
            return OK
        x, y = fo.f_split(F, FM, leaf, k - 1)
        PHI[ra] = x
        PHI[rb] = y
        return OK
    return ERR_BAD_OP


@njit(cache=True)
def z0_run(st, F, FM, FB, PHI, OUT, OM, ops, k0):
    """Run every op; op ``r`` is arrow ``k0 + r``. Returns a status code."""
    for r in range(ops.shape[0]):
        s = z0_step(st, F, FM, FB, PHI, OUT, OM, ops[r, 0], ops[r, 1], ops[r, 2], ops[r, 3], k0 + r)
        if s != OK:
            OM[OM_FAIL] = k0 + r
            return s
    return OK


# dimension 1: arrows of unmatched positive edges in a Fenwick tree
# position of arrow j is j + shift


@njit(cache=True)
def fw_add(FW, i, d):
    n = FW.shape[0] - 1
    while i <= n:
        FW[i] += d
        i += i & (-i)


@njit(cache=True)
def fw_prefix(FW, i):
    n = FW.shape[0] - 1
    if i > n:
        i = n
    s = 0
    while i > 0:
        s += FW[i]
        i -= i & (-i)
    return s


@njit(cache=True)
def fw_kth(FW, kth):
    """Smallest position whose prefix count reaches ``kth`` (1-based)."""
    n = FW.shape[0] - 1
    step = 1
    while step * 2 <= n:
        step *= 2
    pos = 0
    while step > 0:
        nxt = pos + step
        if nxt <= n and FW[nxt] < kth:
            pos = nxt
            kth -= FW[nxt]
        step //= 2
    return pos + 1


@njit(cache=True)
def u_successor(FW, OM, shift, q):
    """Smallest arrow ``j`` in U with ``j > q``, or ``None``-like ``INF``."""
    pos = q + shift
    if pos < 0:
        pos = 0
    below = fw_prefix(FW, pos)
    if below >= OM[OM_USIZE]:
        return hd.INF
    return fw_kth(FW, below + 1) - shift


@njit(cache=True)
def z1_step(st, FW, FP, OUT, OM, op, a, b, h, k, shift):
    if op == NOOP or op == ADDV or op == DELV:
        return OK
    if op == ADDE:
        positive = a == b or hd.hdt_connected(st, a, b)
        hd.hdt_insert(st, h, a, b, k - 1)
        if positive:
            fw_add(FW, k + shift, 1)
            FP[k + shift] = 1
            OM[OM_USIZE] += 1
        return OK
    if op == DELE:
        E = st[1]
        w = E[h, hd.EW]
        hd.hdt_delete(st, h)
        if not hd.hdt_connected(st, a, b):
            return OK
        wstar = hd.hdt_path_max(st, a, b)
        q = wstar if wstar > w else w
        j = u_successor(FW, OM, shift, q)
        if j == hd.INF:
            return ERR_NO_PARTNER
        fw_add(FW, j + shift, -1)
        FP[j + shift] = 0
        OM[OM_USIZE] -= 1
        c = OM[OM_COUNT]
        OUT[c, 0] = j if j > 0 else 0
        OUT[c, 1] = k - 1
        OM[OM_COUNT] = c + 1
        return OK
    return ERR_BAD_OP


@njit(cache=True)
def z1_run(st, FW, FP, OUT, OM, ops, k0, shift):
    for r in range(ops.shape[0]):
        s = z1_step(st, FW, FP, OUT, OM, ops[r, 0], ops[r, 1], ops[r, 2], ops[r, 3], k0 + r, shift)
        if s != OK:
            OM[OM_FAIL] = k0 + r
            return s
    return OK


@njit(cache=True)
def z1_open_intervals(FP, OUT, OM, shift, m):
    c = OM[OM_COUNT]
    for pos in range(1, FP.shape[0]):
        if FP[pos]:
            j = pos - shift
            OUT[c, 0] = j if j > 0 else 0
            OUT[c, 1] = m
            c += 1
    OM[OM_COUNT] = c


def fenwick(size: int):
    return np.zeros(size + 1, dtype=np.int64), np.zeros(size + 1, dtype=np.int8)
