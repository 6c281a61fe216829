"""Zero-dimensional zigzag barcodes of graph filtrations.

Each component of the current graph owns a leaf of a barcode forest; the map
``phi`` from component ids of the dynamic connectivity structure to leaves
is refreshed after every update because component ids are not stable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _forest as fo
from . import _hdt as hd
from . import _zigzag as zz
from .barcode import Barcode, Interval
from .connectivity import DynConn
from .filtration import Arrow, Simplex, ZigzagFiltration
from .forest import BarcodeForest
from .script import GraphScript, encode_graph


class ZeroState:
    """Arrow-at-a-time dimension-0 computation over vertex ids ``0..n_v-1``.

    ``initial_graph`` is an edge list for a non-empty ``G_0``. When it is
    given, ``G_0`` holds every vertex of the universe unless
    ``initial_vertices`` names a subset. Parallel initial edges are allowed.
    With ``debug=True`` the bijection between components and leaves is
    checked after every arrow.
    """

    def __init__(self, n_v: int, initial_graph=None, *, initial_vertices=None,
                 debug: bool = False):
        self.n = int(n_v)
        self.conn = DynConn(self.n)
        self.forest = BarcodeForest()
        self.phi: dict[int, int] = {}
        self.present: set[int] = set()
        self.edges: dict[tuple[int, int], list[int]] = {}
        self.debug = debug
        if initial_graph is not None and initial_vertices is None:
            initial_vertices = range(self.n)
        for v in initial_vertices or ():
            self.present.add(self._check_vertex(int(v)))
        for u, v in initial_graph or ():
            u, v = self._check_vertex(int(u)), self._check_vertex(int(v))
            if u not in self.present or v not in self.present:
                raise ValueError(f"initial edge ({u}, {v}) has an absent endpoint")
            self.edges.setdefault((min(u, v), max(u, v)), []).append(self.conn.insert_edge(u, v))
        for v in sorted(self.present):
            c = self.conn.find(v)
            if c not in self.phi:
                self.phi[c] = self.forest.new_root(0)
        if debug:
            self.check_phi()

    def _check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        return v

    def process_arrow(self, arrow: Arrow, i: int) -> list[Interval]:
        """Apply arrow ``i`` (1-based) and return the intervals it closes."""
        out = self._apply(arrow, int(i))
        if self.debug:
            self.check_phi()
        return out

    def _apply(self, arrow: Arrow, i: int) -> list[Interval]:
        s = arrow.simplex
        if s is None or s.dim > 1:
            return []
        conn, forest, phi = self.conn, self.forest, self.phi
        if s.dim == 0:
            v = self._check_vertex(s.verts[0])
            if arrow.forward:
                self.present.add(v)
                phi[conn.find(v)] = forest.new_root(i)
                return []
            self.present.discard(v)
            level, kind = forest.departure_scan(phi.pop(conn.find(v)))
            return [Interval(level if kind == "root" else level + 1, i - 1)]
        u, v = (self._check_vertex(x) for x in s.verts)
        key = (u, v)
        if arrow.forward:
            t1, t2 = conn.find(u), conn.find(v)
            l1, l2 = phi.pop(t1), phi.pop(t2, None)
            self.edges.setdefault(key, []).append(conn.insert_edge(u, v))
            if t1 == t2:
                phi[conn.find(u)] = l1
                return []
            res = forest.merge(l1, l2)
            phi[conn.find(u)] = res.leaf
            return [Interval(res.birth, i - 1)]
        leaf = phi.pop(conn.find(u))
        handles = self.edges[key]
        conn.delete_edge(handles.pop())
        if not handles:
            del self.edges[key]
        if conn.connected(u, v):
            phi[conn.find(u)] = leaf
            return []
        l1, l2 = forest.split(leaf, i - 1)
        phi[conn.find(u)] = l1
        phi[conn.find(v)] = l2
        return []

    def finalize(self, m: int) -> list[Interval]:
        return [Interval(b, d) for b, d in self.forest.open_intervals(int(m))]

    def check_phi(self) -> None:
        comps = {self.conn.find(v) for v in self.present}
        assert set(self.phi) == comps, "phi keys differ from the live components"
        leaves = set(self.phi.values())
        assert len(leaves) == len(comps), "two components share a leaf"
        assert leaves == set(self.forest.leaves()), "phi values differ from the live leaves"


@dataclass
class ZeroStats:
    nodes_created: int = 0
    scan_visits: int = 0
    live_trees: int = 0
    promotions: int = 0


def run_script0(script: GraphScript, stats: ZeroStats | None = None) -> np.ndarray:
    """Dimension-0 intervals of a graph script as an ``(r, 2)`` array."""
    n_addv = script.count(zz.ADDV)
    n_dele = script.count(zz.DELE)
    n_adde = script.count(zz.ADDE)
    n_init = int(script.init_vertices.shape[0])
    cap = 2 * (n_addv + n_dele + n_init) + n_adde + 4
    F, FM, FB = fo.new_forest(cap)
    st = hd.new_state(script.n, script.n_handles, False)
    PHI = np.full(st[0].shape[0], -1, dtype=np.int64)
    OUT = np.zeros((n_addv + n_dele + n_init + 1, 2), dtype=np.int64)
    OM = np.zeros(zz.OM_FIELDS, dtype=np.int64)
    if n_init or script.init_edges.shape[0]:
        zz.z0_load_initial(st, F, FM, PHI, script.init_vertices, script.init_edges)
    status = zz.z0_run(st, F, FM, FB, PHI, OUT, OM, script.ops, 1)
    if status != zz.OK:
        raise RuntimeError(f"dimension-0 driver failed at arrow {int(OM[zz.OM_FAIL])} "
                           f"(status {status})")
    count = fo.f_open_intervals(F, FM, script.m, OUT, OM[zz.OM_COUNT])
    if stats is not None:
        stats.nodes_created = int(FM[fo.FM_COUNT])
        stats.scan_visits = int(FM[fo.FM_VISITS])
        stats.live_trees = int(FM[fo.FM_TREES])
        stats.promotions = int(st[5][hd.M_PROMOTIONS])
    return OUT[:count]


def _with_initial(filt: ZigzagFiltration, initial_graph) -> ZigzagFiltration:
    extra = []
    for item in initial_graph:
        if isinstance(item, Simplex):
            extra.append(item)
        elif isinstance(item, (tuple, list)):
            u, v = (int(x) for x in item)
            extra += [Simplex((u,)), Simplex((v,)), Simplex((min(u, v), max(u, v)))]
        else:
            extra.append(Simplex((int(item),)))
    init = set(filt.initial) | set(extra)
    for s in list(init):
        init.update(s.faces())
    return ZigzagFiltration(filt.arrows, tuple(init), filt.dim, filt.n_vertices, filt.coords)


def compute_barcode0(filt: ZigzagFiltration | GraphScript, initial_graph=None, *,
                     stats: ZeroStats | None = None) -> Barcode:
    """Zero-dimensional barcode; triangles in ``filt`` are ignored."""
    if isinstance(filt, GraphScript):
        script = filt
    else:
        if initial_graph:
            filt = _with_initial(filt, initial_graph)
        script = encode_graph(filt)
    return Barcode.of(0, run_script0(script, stats).tolist())
