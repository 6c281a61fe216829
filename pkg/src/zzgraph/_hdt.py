"""Array-based Holm-de Lichtenberg-Thorup hierarchy, compiled with numba.

State is a tuple of arrays ``(T, E, H, HR, SL, M, C, STK)``:

``T``
    Treap nodes of the Euler-tour forests, one forest per level.
    Vertex ``v`` at level ``i`` is node ``i*n + v``. Tree slot ``s`` owns two
    arc nodes per level, ``L*n + (s*L + i)*2 + d``.
``E``
    Edge records indexed by handle.
``H``, ``HR``
    Pairing heaps of non-tree edge endpoints, one heap per ``(level, vertex)``,
    keyed by edge weight. Endpoint entry ``2h`` sits at ``u`` and ``2h+1``
    at ``v``.
``SL``
    Tree-slot table (edge of the slot, free-list link).
``M``
    Scalars such as ``n``, the level count and counters.
``C``, ``STK``
    Link-cut tree over vertices ``0..n-1`` and tree-slot nodes ``n+s``. It
    mirrors the level-0 forest and answers path-maximum queries. It is used
    only when ``M[M_MSF]`` is set.

Every vertex appears in every level's forest, and a level-``i`` tree edge is
present in the forests of levels ``0..i``. Non-tree edges are searched
lightest first, so with distinct weights the level-0 forest is the minimum
spanning forest.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# treap fields
LEFT, RIGHT, PARENT, PRIO, SIZE, VCNT, KEY, AGG, TFLAG, TAGG, ISV = range(11)
T_FIELDS = 11
# edge fields
EU, EV, EW, ELEVEL, ESTATUS, ESLOT = range(6)
E_FIELDS = 6
DEAD, NONTREE, TREE, LOOP = 0, 1, 2, 3
# heap fields
HCHILD, HSIB, HPREV = range(3)
# link-cut fields
CH0, CH1, CPAR, CREV, CVAL, CAGG = range(6)
C_FIELDS = 6
# meta fields
M_N, M_L, M_FREE, M_MAXW, M_MSF, M_ARCBASE, M_REBUILDS, M_PROMOTIONS = range(8)
M_FIELDS = 8

INF = np.int64(2**62)
NEG = np.int64(-(2**62))


def n_levels(n: int) -> int:
    return max(1, int(n).bit_length())


def new_state(n: int, edge_cap: int, msf: bool, seed: int = 0x5EED):
    L = n_levels(n)
    n_nodes = 3 * L * n
    rng = np.random.default_rng(seed)
    T = np.full((n_nodes, T_FIELDS), -1, dtype=np.int64)
    T[:, PRIO] = rng.integers(0, 2**62, size=n_nodes, dtype=np.int64)
    T[:, SIZE] = 1
    T[:, KEY] = INF
    T[:, AGG] = INF
    T[:, TFLAG] = 0
    T[:, TAGG] = 0
    T[:, ISV] = 0
    T[: L * n, ISV] = 1
    T[:, VCNT] = T[:, ISV]
    edge_cap = max(int(edge_cap), 4)
    E = np.full((edge_cap, E_FIELDS), -1, dtype=np.int64)
    E[:, ESTATUS] = DEAD
    H = np.full((2 * edge_cap, 3), -1, dtype=np.int64)
    HR = np.full(L * n, -1, dtype=np.int64)
    SL = np.full((max(n, 1), 2), -1, dtype=np.int64)
    SL[:, 1] = np.arange(1, max(n, 1) + 1)
    SL[-1, 1] = -1
    M = np.zeros(M_FIELDS, dtype=np.int64)
    M[M_N] = n
    M[M_L] = L
    M[M_FREE] = 0 if n > 0 else -1
    M[M_MAXW] = NEG
    M[M_MSF] = 1 if msf else 0
    M[M_ARCBASE] = L * n
    n_lct = 2 * n if msf else 0
    C = np.full((n_lct, C_FIELDS), -1, dtype=np.int64)
    if n_lct:
        C[:, CREV] = 0
        C[:, CVAL] = NEG
        C[:, CAGG] = np.arange(n_lct)
    STK = np.zeros(max(n_lct, 1), dtype=np.int64)
    return (T, E, H, HR, SL, M, C, STK)


def grow_edges(state, need: int):
    """Return a state whose edge arrays hold at least ``need`` handles."""
    T, E, H, HR, SL, M, C, STK = state
    cap = E.shape[0]
    if need <= cap:
        return state
    new_cap = max(need, 2 * cap)
    E2 = np.full((new_cap, E_FIELDS), -1, dtype=np.int64)
    E2[:, ESTATUS] = DEAD
    E2[:cap] = E
    H2 = np.full((2 * new_cap, 3), -1, dtype=np.int64)
    H2[: 2 * cap] = H
    return (T, E2, H2, HR, SL, M, C, STK)


# ===================================================================== treap

@njit(cache=True)
def t_pull(T, x):
    l = T[x, LEFT]
    r = T[x, RIGHT]
    size = 1
    vc = T[x, ISV]
    agg = T[x, KEY]
    tg = T[x, TFLAG]
    if l != -1:
        size += T[l, SIZE]
        vc += T[l, VCNT]
        tg += T[l, TAGG]
        if T[l, AGG] < agg:
            agg = T[l, AGG]
    if r != -1:
        size += T[r, SIZE]
        vc += T[r, VCNT]
        tg += T[r, TAGG]
        if T[r, AGG] < agg:
            agg = T[r, AGG]
    T[x, SIZE] = size
    T[x, VCNT] = vc
    T[x, AGG] = agg
    T[x, TAGG] = tg


@njit(cache=True)
def t_pull_up(T, x):
    while x != -1:
        t_pull(T, x)
        x = T[x, PARENT]


@njit(cache=True)
def t_root(T, x):
    while T[x, PARENT] != -1:
        x = T[x, PARENT]
    return x


@njit(cache=True)
def t_reset(T, x):
    T[x, LEFT] = -1
    T[x, RIGHT] = -1
    T[x, PARENT] = -1
    t_pull(T, x)


@njit(cache=True)
def t_rank(T, x):
    r = 1
    if T[x, LEFT] != -1:
        r += T[T[x, LEFT], SIZE]
    while T[x, PARENT] != -1:
        p = T[x, PARENT]
        if T[p, RIGHT] == x:
            r += 1
            if T[p, LEFT] != -1:
                r += T[T[p, LEFT], SIZE]
        x = p
    return r


@njit(cache=True)
def t_split(T, x, keep_left):
    """Split the sequence containing ``x`` next to it.

    With ``keep_left`` true ``x`` ends the left part; otherwise it starts the
    right part. Returns the two roots (``-1`` for an empty side).
    """
    if keep_left:
        r = T[x, RIGHT]
        if r != -1:
            T[r, PARENT] = -1
            T[x, RIGHT] = -1
        l = x
    else:
        l = T[x, LEFT]
        if l != -1:
            T[l, PARENT] = -1
            T[x, LEFT] = -1
        r = x
    t_pull(T, x)
    cur = x
    p = T[x, PARENT]
    T[x, PARENT] = -1
    while p != -1:
        pp = T[p, PARENT]
        T[p, PARENT] = -1
        if T[p, RIGHT] == cur:
            T[p, RIGHT] = l
            if l != -1:
                T[l, PARENT] = p
            t_pull(T, p)
            l = p
        else:
            T[p, LEFT] = r
            if r != -1:
                T[r, PARENT] = p
            t_pull(T, p)
            r = p
        cur = p
        p = pp
    return l, r


@njit(cache=True)
def t_merge(T, a, b):
    if a == -1:
        return b
    if b == -1:
        return a
    root = -1
    last = -1
    side = 0
    while a != -1 and b != -1:
        if T[a, PRIO] > T[b, PRIO]:
            x = a
            a = T[a, RIGHT]
            nside = 1
        else:
            x = b
            b = T[b, LEFT]
            nside = 0
        if last == -1:
            root = x
            T[x, PARENT] = -1
        else:
            if side == 1:
                T[last, RIGHT] = x
            else:
                T[last, LEFT] = x
            T[x, PARENT] = last
        last = x
        side = nside
    rest = a if a != -1 else b
    if side == 1:
        T[last, RIGHT] = rest
    else:
        T[last, LEFT] = rest
    if rest != -1:
        T[rest, PARENT] = last
    x = last
    while x != -1:
        t_pull(T, x)
        x = T[x, PARENT]
    return root


@njit(cache=True)
def t_find_min_key(T, root):
    target = T[root, AGG]
    x = root
    while True:
        l = T[x, LEFT]
        if l != -1 and T[l, AGG] == target:
            x = l
        elif T[x, KEY] == target:
            return x
        else:
            x = T[x, RIGHT]


@njit(cache=True)
def t_find_tflag(T, root):
    x = root
    while True:
        l = T[x, LEFT]
        if l != -1 and T[l, TAGG] > 0:
            x = l
        elif T[x, TFLAG] > 0:
            return x
        else:
            x = T[x, RIGHT]


@njit(cache=True)
def ett_reroot(T, x):
    l, r = t_split(T, x, False)
    return t_merge(T, r, l)


@njit(cache=True)
def ett_link(T, x, y, a, b):
    """Join the tours of vertex nodes ``x`` and ``y`` with arcs ``a`` (x->y), ``b`` (y->x)."""
    U = ett_reroot(T, x)
    V = ett_reroot(T, y)
    t_merge(T, t_merge(T, t_merge(T, U, a), V), b)


@njit(cache=True)
def ett_cut(T, a, b):
    if t_rank(T, a) > t_rank(T, b):
        a, b = b, a
    X, _ = t_split(T, a, False)
    _, rest = t_split(T, a, True)
    _, rest = t_split(T, b, False)
    _, Z = t_split(T, b, True)
    t_merge(T, X, Z)
    t_reset(T, a)
    t_reset(T, b)


# ============================================================ pairing heaps

@njit(cache=True)
def h_meld(H, E, a, b):
    if a == -1:
        return b
    if b == -1:
        return a
    if E[b >> 1, EW] < E[a >> 1, EW]:
        a, b = b, a
    c = H[a, HCHILD]
    H[b, HSIB] = c
    if c != -1:
        H[c, HPREV] = b
    H[b, HPREV] = a
    H[a, HCHILD] = b
    return a


@njit(cache=True)
def h_merge_pairs(H, E, first):
    if first == -1:
        return -1
    acc = -1
    x = first
    while x != -1:
        a = x
        b = H[a, HSIB]
        nxt = -1
        if b != -1:
            nxt = H[b, HSIB]
        H[a, HSIB] = -1
        H[a, HPREV] = -1
        if b != -1:
            H[b, HSIB] = -1
            H[b, HPREV] = -1
            a = h_meld(H, E, a, b)
        H[a, HSIB] = acc
        acc = a
        x = nxt
    res = acc
    x = H[acc, HSIB]
    H[res, HSIB] = -1
    while x != -1:
        nxt = H[x, HSIB]
        H[x, HSIB] = -1
        res = h_meld(H, E, res, x)
        x = nxt
    H[res, HPREV] = -1
    return res


@njit(cache=True)
def h_delete(H, E, root, x):
    if x == root:
        c = H[x, HCHILD]
        H[x, HCHILD] = -1
        if c != -1:
            H[c, HPREV] = -1
        return h_merge_pairs(H, E, c)
    p = H[x, HPREV]
    s = H[x, HSIB]
    if H[p, HCHILD] == x:
        H[p, HCHILD] = s
    else:
        H[p, HSIB] = s
    if s != -1:
        H[s, HPREV] = p
    H[x, HSIB] = -1
    H[x, HPREV] = -1
    c = H[x, HCHILD]
    H[x, HCHILD] = -1
    if c != -1:
        H[c, HPREV] = -1
        root = h_meld(H, E, root, h_merge_pairs(H, E, c))
    return root


# ========================================================== link-cut tree

@njit(cache=True)
def _l_isroot(C, x):
    p = C[x, CPAR]
    return p == -1 or (C[p, CH0] != x and C[p, CH1] != x)


@njit(cache=True)
def _l_pull(C, x):
    best = x
    c = C[x, CH0]
    if c != -1 and C[C[c, CAGG], CVAL] > C[best, CVAL]:
        best = C[c, CAGG]
    c = C[x, CH1]
    if c != -1 and C[C[c, CAGG], CVAL] > C[best, CVAL]:
        best = C[c, CAGG]
    C[x, CAGG] = best


@njit(cache=True)
def _l_flip(C, x):
    c = C[x, CH0]
    C[x, CH0] = C[x, CH1]
    C[x, CH1] = c
    C[x, CREV] ^= 1


@njit(cache=True)
def _l_push(C, x):
    if C[x, CREV]:
        if C[x, CH0] != -1:
            _l_flip(C, C[x, CH0])
        if C[x, CH1] != -1:
            _l_flip(C, C[x, CH1])
        C[x, CREV] = 0


@njit(cache=True)
def _l_rotate(C, x):
    p = C[x, CPAR]
    g = C[p, CPAR]
    dx = 1 if C[p, CH1] == x else 0
    b = C[x, 1 - dx]
    if not _l_isroot(C, p):
        if C[g, CH0] == p:
            C[g, CH0] = x
        else:
            C[g, CH1] = x
    C[x, CPAR] = g
    C[x, 1 - dx] = p
    C[p, CPAR] = x
    C[p, dx] = b
    if b != -1:
        C[b, CPAR] = p
    _l_pull(C, p)
    _l_pull(C, x)


@njit(cache=True)
def _l_splay(C, STK, x):
    top = 0
    y = x
    STK[0] = y
    while not _l_isroot(C, y):
        y = C[y, CPAR]
        top += 1
        STK[top] = y
    while top >= 0:
        _l_push(C, STK[top])
        top -= 1
    while not _l_isroot(C, x):
        p = C[x, CPAR]
        if not _l_isroot(C, p):
            g = C[p, CPAR]
            if (C[g, CH0] == p) == (C[p, CH0] == x):
                _l_rotate(C, p)
            else:
                _l_rotate(C, x)
        _l_rotate(C, x)


@njit(cache=True)
def _l_access(C, STK, x):
    last = -1
    y = x
    while y != -1:
        _l_splay(C, STK, y)
        C[y, CH1] = last
        _l_pull(C, y)
        last = y
        y = C[y, CPAR]
    _l_splay(C, STK, x)


@njit(cache=True)
def _l_makeroot(C, STK, x):
    _l_access(C, STK, x)
    _l_flip(C, x)


@njit(cache=True)
def l_link(C, STK, x, y):
    _l_makeroot(C, STK, x)
    C[x, CPAR] = y


@njit(cache=True)
def l_cut(C, STK, x, y):
    _l_makeroot(C, STK, x)
    _l_access(C, STK, y)
    C[y, CH0] = -1
    C[x, CPAR] = -1
    _l_pull(C, y)


@njit(cache=True)
def l_path_max(C, STK, x, y):
    """Largest value on the tree path ``x .. y`` (``NEG`` for an edgeless path)."""
    _l_makeroot(C, STK, x)
    _l_access(C, STK, y)
    return C[C[y, CAGG], CVAL]


# ============================================================ hierarchy

@njit(cache=True)
def _arc(M, s, i, d):
    return M[M_ARCBASE] + (s * M[M_L] + i) * 2 + d


@njit(cache=True)
def _refresh_key(T, E, HR, idx):
    r = HR[idx]
    k = INF if r == -1 else E[r >> 1, EW]
    if T[idx, KEY] != k:
        T[idx, KEY] = k
        t_pull_up(T, idx)


@njit(cache=True)
def _nt_add(st, h, level):
    T, E, H, HR, SL, M, C, STK = st
    n = M[M_N]
    E[h, ELEVEL] = level
    E[h, ESTATUS] = NONTREE
    for side in range(2):
        x = E[h, EU] if side == 0 else E[h, EV]
        e = 2 * h + side
        H[e, HCHILD] = -1
        H[e, HSIB] = -1
        H[e, HPREV] = -1
        idx = level * n + x
        HR[idx] = h_meld(H, E, HR[idx], e)
        _refresh_key(T, E, HR, idx)


@njit(cache=True)
def _nt_remove(st, h):
    T, E, H, HR, SL, M, C, STK = st
    n = M[M_N]
    level = E[h, ELEVEL]
    for side in range(2):
        x = E[h, EU] if side == 0 else E[h, EV]
        idx = level * n + x
        HR[idx] = h_delete(H, E, HR[idx], 2 * h + side)
        _refresh_key(T, E, HR, idx)


@njit(cache=True)
def _link_level(st, h, i):
    T, E, H, HR, SL, M, C, STK = st
    n = M[M_N]
    s = E[h, ESLOT]
    a = _arc(M, s, i, 0)
    b = _arc(M, s, i, 1)
    T[a, TFLAG] = 0
    T[b, TFLAG] = 0
    t_reset(T, a)
    t_reset(T, b)
    ett_link(T, i * n + E[h, EU], i * n + E[h, EV], a, b)


@njit(cache=True)
def _set_tflag(st, h, i, value):
    T, E, H, HR, SL, M, C, STK = st
    a = _arc(M, E[h, ESLOT], i, 0)
    T[a, TFLAG] = value
    t_pull_up(T, a)


@njit(cache=True)
def _make_tree(st, h, level):
    T, E, H, HR, SL, M, C, STK = st
    n = M[M_N]
    s = M[M_FREE]
    M[M_FREE] = SL[s, 1]
    SL[s, 0] = h
    E[h, ESLOT] = s
    E[h, ESTATUS] = TREE
    E[h, ELEVEL] = level
    for i in range(level + 1):
        _link_level(st, h, i)
    _set_tflag(st, h, level, 1)
    if M[M_MSF]:
        node = n + s
        C[node, CH0] = -1
        C[node, CH1] = -1
        C[node, CPAR] = -1
        C[node, CREV] = 0
        C[node, CVAL] = E[h, EW]
        C[node, CAGG] = node
        l_link(C, STK, E[h, EU], node)
        l_link(C, STK, node, E[h, EV])


@njit(cache=True)
def _unmake_tree(st, h):
    """Remove tree edge ``h`` from every level without searching for a replacement."""
    T, E, H, HR, SL, M, C, STK = st
    n = M[M_N]
    s = E[h, ESLOT]
    level = E[h, ELEVEL]
    _set_tflag(st, h, level, 0)
    for i in range(level + 1):
        ett_cut(T, _arc(M, s, i, 0), _arc(M, s, i, 1))
    if M[M_MSF]:
        l_cut(C, STK, E[h, EU], n + s)
        l_cut(C, STK, n + s, E[h, EV])
    SL[s, 0] = -1
    SL[s, 1] = M[M_FREE]
    M[M_FREE] = s
    E[h, ESLOT] = -1


@njit(cache=True)
def hdt_connected(st, u, v):
    T = st[0]
    return t_root(T, u) == t_root(T, v)


@njit(cache=True)
def hdt_find(st, v):
    return t_root(st[0], v)


@njit(cache=True)
def _replace(st, u, v, top):
    """Reconnect ``u`` and ``v`` after a tree edge of level ``top`` was cut."""
    T, E, H, HR, SL, M, C, STK = st
    n = M[M_N]
    L = M[M_L]
    base = M[M_ARCBASE]
    for i in range(top, -1, -1):
        ru = t_root(T, i * n + u)
        rv = t_root(T, i * n + v)
        small = ru if T[ru, VCNT] <= T[rv, VCNT] else rv
        while T[small, TAGG] > 0:
            x = t_find_tflag(T, small)
            h2 = SL[(x - base) // (2 * L), 0]
            if i + 1 >= L:
                raise RuntimeError("level bound exceeded")
            _set_tflag(st, h2, i, 0)
            E[h2, ELEVEL] = i + 1
            _link_level(st, h2, i + 1)
            _set_tflag(st, h2, i + 1, 1)
            M[M_PROMOTIONS] += 1
        while T[small, AGG] < INF:
            x = t_find_min_key(T, small)
            e = HR[x]
            h2 = e >> 1
            other = E[h2, EV] if (e & 1) == 0 else E[h2, EU]
            if t_root(T, i * n + other) == small:
                if i + 1 >= L:
                    raise RuntimeError("level bound exceeded")
                _nt_remove(st, h2)
                _nt_add(st, h2, i + 1)
                M[M_PROMOTIONS] += 1
            else:
                _nt_remove(st, h2)
                _make_tree(st, h2, i)
                return True
    return False


@njit(cache=True)
def _collect_component(st, v):
    """Handles of all live non-loop edges in the component of ``v``."""
    T, E, H, HR, SL, M, C, STK = st
    n = M[M_N]
    L = M[M_L]
    base = M[M_ARCBASE]
    root = t_root(T, v)
    stack = np.empty(T[root, SIZE] + 1, dtype=np.int64)
    verts = np.empty(T[root, VCNT], dtype=np.int64)
    out = np.empty(T[root, SIZE] + 2 * E.shape[0] + 1, dtype=np.int64)
    nv = 0
    no = 0
    top = 0
    stack[0] = root
    while top >= 0:
        x = stack[top]
        top -= 1
        if x < n:
            verts[nv] = x
            nv += 1
        elif x >= base:
            off = x - base
            if off % 2 == 0 and (off // 2) % L == 0:
                out[no] = SL[off // (2 * L), 0]
                no += 1
        if T[x, LEFT] != -1:
            top += 1
            stack[top] = T[x, LEFT]
        if T[x, RIGHT] != -1:
            top += 1
            stack[top] = T[x, RIGHT]
    hstack = np.empty(2 * E.shape[0] + 1, dtype=np.int64)
    for k in range(nv):
        w = verts[k]
        for i in range(L):
            r = HR[i * n + w]
            if r == -1:
                continue
            top = 0
            hstack[0] = r
            while top >= 0:
                e = hstack[top]
                top -= 1
                if (e & 1) == 0:
                    out[no] = e >> 1
                    no += 1
                if H[e, HCHILD] != -1:
                    top += 1
                    hstack[top] = H[e, HCHILD]
                if H[e, HSIB] != -1:
                    top += 1
                    hstack[top] = H[e, HSIB]
    return out[:no]


@njit(cache=True)
def _rebuild_with(st, h_new):
    """Insert ``h_new`` by re-adding its component's edges in weight order.

    Used when a new edge is lighter than some live edge and closes a cycle;
    restarting the component at level 0 restores every invariant.
    """
    T, E, H, HR, SL, M, C, STK = st
    hs = _collect_component(st, E[h_new, EU])
    for k in range(hs.shape[0]):
        h = hs[k]
        if E[h, ESTATUS] == TREE:
            _unmake_tree(st, h)
        else:
            _nt_remove(st, h)
    allh = np.empty(hs.shape[0] + 1, dtype=np.int64)
    allh[:-1] = hs
    allh[-1] = h_new
    w = np.empty(allh.shape[0], dtype=np.int64)
    for k in range(allh.shape[0]):
        w[k] = E[allh[k], EW]
    order = np.argsort(w)
    for k in range(order.shape[0]):
        h = allh[order[k]]
        if hdt_connected(st, E[h, EU], E[h, EV]):
            _nt_add(st, h, 0)
        else:
            _make_tree(st, h, 0)
    M[M_REBUILDS] += 1


@njit(cache=True)
def hdt_insert(st, h, u, v, w):
    T, E, H, HR, SL, M, C, STK = st
    E[h, EU] = u
    E[h, EV] = v
    E[h, EW] = w
    E[h, ELEVEL] = 0
    E[h, ESLOT] = -1
    if u == v:
        E[h, ESTATUS] = LOOP
    elif hdt_connected(st, u, v):
        if M[M_MSF] == 0 or w > M[M_MAXW]:
            _nt_add(st, h, 0)
        else:
            E[h, ESTATUS] = NONTREE
            _rebuild_with(st, h)
    else:
        _make_tree(st, h, 0)
    if w > M[M_MAXW]:
        M[M_MAXW] = w


@njit(cache=True)
def hdt_delete(st, h):
    """Delete edge ``h``; return True when it was a tree edge and stayed reconnected."""
    E = st[1]
    status = E[h, ESTATUS]
    if status == NONTREE:
        _nt_remove(st, h)
        E[h, ESTATUS] = DEAD
        return False
    if status == TREE:
        level = E[h, ELEVEL]
        _unmake_tree(st, h)
        E[h, ESTATUS] = DEAD
        return _replace(st, E[h, EU], E[h, EV], level)
    E[h, ESTATUS] = DEAD
    return False


@njit(cache=True)
def hdt_path_max(st, u, v):
    C = st[6]
    STK = st[7]
    if u == v:
        return NEG
    return l_path_max(C, STK, u, v)
