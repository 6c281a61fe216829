"""Compiled barcode forest.

Only the nodes that can still produce an interval are kept:

* an unpaired entering root with a single child;
* unpaired splitting nodes, each with exactly two children;
* leaves, i.e. the current components.

A node whose level has been used is spliced out at once. Every departure
therefore finds its answer at the leaf's parent, and every ancestor walk
visits only unpaired nodes.

Arrays: ``F[x] = (parent, child0, child1, level, kind)``; ``FM`` holds the
node counter and the departure-scan visit counter; ``FB`` is scratch space
for gluing chains.
"""

from __future__ import annotations

import numpy as np
from numba import njit

FPAR, FCH0, FCH1, FLVL, FKIND = range(5)
F_FIELDS = 5
LEAF, ROOT, SPLIT, GONE = 0, 1, 2, 3
FM_COUNT, FM_VISITS, FM_TREES = range(3)
FM_FIELDS = 3

_TOP = np.int64(2**62)


def new_forest(cap: int):
    cap = max(int(cap), 4)
    F = np.full((cap, F_FIELDS), -1, dtype=np.int64)
    F[:, FKIND] = GONE
    FM = np.zeros(FM_FIELDS, dtype=np.int64)
    FB = np.zeros((cap, 3), dtype=np.int64)
    return F, FM, FB


def grow_forest(F, FM, FB, need: int):
    cap = F.shape[0]
    if need <= cap:
        return F, FM, FB
    new_cap = max(need, 2 * cap)
    F2 = np.full((new_cap, F_FIELDS), -1, dtype=np.int64)
    F2[:, FKIND] = GONE
    F2[:cap] = F
    return F2, FM, np.zeros((new_cap, 3), dtype=np.int64)


@njit(cache=True)
def _new_node(F, FM, parent, level, kind):
    x = FM[FM_COUNT]
    FM[FM_COUNT] = x + 1
    F[x, FPAR] = parent
    F[x, FCH0] = -1
    F[x, FCH1] = -1
    F[x, FLVL] = level
    F[x, FKIND] = kind
    return x


@njit(cache=True)
def _attach(F, parent, child):
    F[child, FPAR] = parent
    if parent == -1:
        return
    if F[parent, FCH0] == -1:
        F[parent, FCH0] = child
    else:
        F[parent, FCH1] = child


@njit(cache=True)
def _detach(F, parent, child):
    if F[parent, FCH0] == child:
        F[parent, FCH0] = -1
    else:
        F[parent, FCH1] = -1


@njit(cache=True)
def _order_key(F, x):
    kind = F[x, FKIND]
    if kind == LEAF:
        return _TOP
    if kind == ROOT:
        return 2 * F[x, FLVL]
    return 2 * F[x, FLVL] + 1


@njit(cache=True)
def f_root(F, x):
    while F[x, FPAR] != -1:
        x = F[x, FPAR]
    return x


@njit(cache=True)
def f_nca(F, x, y):
    while x != y:
        if _order_key(F, x) >= _order_key(F, y):
            x = F[x, FPAR]
        else:
            y = F[y, FPAR]
        if x == -1 or y == -1:
            return -1
    return x


@njit(cache=True)
def f_enter(F, FM, level):
    """New tree: an entering root at ``level`` and its leaf."""
    r = _new_node(F, FM, -1, level, ROOT)
    leaf = _new_node(F, FM, -1, 0, LEAF)
    _attach(F, r, leaf)
    FM[FM_TREES] += 1
    return leaf


@njit(cache=True)
def f_split(F, FM, leaf, level):
    """The component of ``leaf`` splits: it becomes a splitting node with two new leaves."""
    F[leaf, FKIND] = SPLIT
    F[leaf, FLVL] = level
    a = _new_node(F, FM, -1, 0, LEAF)
    b = _new_node(F, FM, -1, 0, LEAF)
    _attach(F, leaf, a)
    _attach(F, leaf, b)
    return a, b


@njit(cache=True)
def f_depart(F, FM, leaf):
    """Remove ``leaf``; return ``(birth, was_root)`` for the interval it closes."""
    p = F[leaf, FPAR]
    F[leaf, FKIND] = GONE
    FM[FM_VISITS] += 1
    if F[p, FKIND] == ROOT:
        F[p, FKIND] = GONE
        FM[FM_TREES] -= 1
        return F[p, FLVL], True
    other = F[p, FCH0] if F[p, FCH1] == leaf else F[p, FCH1]
    g = F[p, FPAR]
    _detach(F, g, p)
    _attach(F, g, other)
    F[p, FKIND] = GONE
    return F[p, FLVL] + 1, False


@njit(cache=True)
def _merge_chains(F, FB, na, nb, above, leaf):
    """Interleave chains ``FB[:na, 0]`` and ``FB[:nb, 1]`` (deepest first) by level.

    The deepest node of the result receives ``leaf``; the shallowest hangs
    below ``above``.
    """
    ia = 0
    ib = 0
    nm = 0
    while ia < na or ib < nb:
        if ib >= nb or (ia < na and F[FB[ia, 0], FLVL] > F[FB[ib, 1], FLVL]):
            FB[nm, 2] = FB[ia, 0]
            ia += 1
        else:
            FB[nm, 2] = FB[ib, 1]
            ib += 1
        nm += 1
    child = leaf
    for k in range(nm):
        x = FB[k, 2]
        _attach(F, x, child)
        child = x
    _attach(F, above, child)


@njit(cache=True)
def f_merge(F, FM, FB, l1, l2):
    """Two components merge; return ``(birth, new_leaf, cross_tree)``."""
    r1 = f_root(F, l1)
    r2 = f_root(F, l2)
    leaf = _new_node(F, FM, -1, 0, LEAF)
    if r1 != r2:
        if F[r1, FLVL] > F[r2, FLVL]:
            l1, l2 = l2, l1
            r1, r2 = r2, r1
        j = F[r2, FLVL]
        # younger tree: everything strictly below its root
        nb = 0
        x = F[l2, FPAR]
        prev = l2
        while x != r2:
            _detach(F, x, prev)
            FB[nb, 1] = x
            nb += 1
            prev = x
            x = F[x, FPAR]
        # older tree: path nodes above level j
        na = 0
        x = F[l1, FPAR]
        prev = l1
        while F[x, FKIND] != ROOT and F[x, FLVL] > j:
            _detach(F, x, prev)
            FB[na, 0] = x
            na += 1
            prev = x
            x = F[x, FPAR]
        _detach(F, x, prev)
        F[r2, FKIND] = GONE
        F[l1, FKIND] = GONE
        F[l2, FKIND] = GONE
        FM[FM_TREES] -= 1
        _merge_chains(F, FB, na, nb, x, leaf)
        return j, leaf, True

    na = 0
    nb = 0
    x = l1
    y = l2
    while x != y:
        if _order_key(F, x) >= _order_key(F, y):
            p = F[x, FPAR]
            _detach(F, p, x)
            FB[na, 0] = p
            na += 1
            x = p
        else:
            p = F[y, FPAR]
            _detach(F, p, y)
            FB[nb, 1] = p
            nb += 1
            y = p
    v = x
    na -= 1
    nb -= 1
    g = F[v, FPAR]
    _detach(F, g, v)
    F[v, FKIND] = GONE
    F[l1, FKIND] = GONE
    F[l2, FKIND] = GONE
    _merge_chains(F, FB, na, nb, g, leaf)
    return F[v, FLVL] + 1, leaf, False


@njit(cache=True)
def f_open_intervals(F, FM, m, OUT, start):
    """Write ``[level, m]`` per live root and ``[level+1, m]`` per live splitting node."""
    k = start
    for x in range(FM[FM_COUNT]):
        kind = F[x, FKIND]
        if kind == ROOT:
            OUT[k, 0] = F[x, FLVL]
            OUT[k, 1] = m
            k += 1
        elif kind == SPLIT:
            OUT[k, 0] = F[x, FLVL] + 1
            OUT[k, 1] = m
            k += 1
    return k
