"""One-dimensional zigzag barcodes of graph filtrations.

An edge insertion that closes a cycle opens an interval. A deletion that
keeps its endpoints connected closes one: the interval with the smallest
open birth ``j`` greater than both the deleted edge's weight and the
bottleneck weight ``w*`` between its endpoints in the remaining graph. Edge
weights are insertion times, so ``w*`` is a path maximum in the minimum
spanning forest.
"""

from __future__ import annotations

import numpy as np

from . import _hdt as hd
from . import _zigzag as zz
from .barcode import Barcode, Interval
from .filtration import Arrow, FiltrationError, ZigzagFiltration
from .msf import DynMsf
from .script import GraphScript, encode_graph


class PairingError(RuntimeError):
    """A negative arrow found no open interval to close (an internal invariant failure)."""


class OrderedIndexSet:
    """Integers ``>= lo`` with insert, remove and successor queries in ``O(log size)``."""

    def __init__(self, lo: int = 1, capacity: int = 64):
        self.lo = int(lo)
        self.fw, self.present = zz.fenwick(max(int(capacity), 1))
        self.om = np.zeros(zz.OM_FIELDS, dtype=np.int64)

    @property
    def _shift(self) -> int:
        return 1 - self.lo

    def _grow(self, j: int) -> None:
        size = self.fw.shape[0] - 1
        need = j + self._shift
        if need <= size:
            return
        items = list(self)
        self.fw, self.present = zz.fenwick(max(need, 2 * size))
        self.om[zz.OM_USIZE] = 0
        for x in items:
            self.add(x)

    def add(self, j: int) -> None:
        j = int(j)
        if j < self.lo:
            raise ValueError(f"{j} is below the lower bound {self.lo}")
        self._grow(j)
        pos = j + self._shift
        if self.present[pos]:
            return
        zz.fw_add(self.fw, pos, 1)
        self.present[pos] = 1
        self.om[zz.OM_USIZE] += 1

    def remove(self, j: int) -> None:
        pos = int(j) + self._shift
        if not (0 < pos < self.present.shape[0] and self.present[pos]):
            raise KeyError(j)
        zz.fw_add(self.fw, pos, -1)
        self.present[pos] = 0
        self.om[zz.OM_USIZE] -= 1

    def successor(self, q: int) -> int | None:
        """Smallest element strictly greater than ``q``."""
        j = int(zz.u_successor(self.fw, self.om, self._shift, int(q)))
        return None if j == hd.INF else j

    def __contains__(self, j: int) -> bool:
        pos = int(j) + self._shift
        return 0 < pos < self.present.shape[0] and bool(self.present[pos])

    def __len__(self) -> int:
        return int(self.om[zz.OM_USIZE])

    def __iter__(self):
        for pos in np.flatnonzero(self.present):
            yield int(pos) - self._shift


class OneState:
    """Arrow-at-a-time dimension-1 computation over vertex ids ``0..n_v-1``.

    Initial edges behave as insertions at arrows ``1-K .. 0`` so that cycles
    of ``G_0`` are born at index 0.
    """

    def __init__(self, n_v: int, initial_edges=()):
        initial_edges = [tuple(int(x) for x in e) for e in initial_edges]
        self.msf = DynMsf(int(n_v))
        k = len(initial_edges)
        self.unpaired = OrderedIndexSet(lo=1 - k, capacity=k + 64)
        self.handles: dict[tuple[int, int], list[int]] = {}
        for r, (u, v) in enumerate(initial_edges):
            self._insert(u, v, r + 1 - k)

    def _insert(self, u: int, v: int, i: int) -> None:
        positive = u == v or self.msf.connected(u, v)
        h = self.msf.insert_edge(u, v, i - 1)
        self.handles.setdefault((min(u, v), max(u, v)), []).append(h)
        if positive:
            self.unpaired.add(i)

    def _handle(self, u: int, v: int) -> int:
        try:
            return self.handles[(min(u, v), max(u, v))][-1]
        except (KeyError, IndexError):
            raise FiltrationError(f"edge ({u}, {v}) is not present", reason="delete-missing") from None

    def classify_arrow(self, arrow: Arrow) -> str:
        """``positive``, ``negative`` or ``neutral`` for the next arrow; the state is unchanged."""
        s = arrow.simplex
        if s is None or s.dim != 1:
            return "neutral"
        u, v = s.verts
        if arrow.forward:
            return "positive" if self.msf.connected(u, v) else "neutral"
        h = self._handle(u, v)
        if not self.msf.is_tree_edge(h):
            return "negative"
        w = self.msf.weight(h)
        self.msf.delete_edge(h)
        still = self.msf.connected(u, v)
        lst = self.handles[(u, v)]
        lst[-1] = self.msf.insert_edge(u, v, w)
        return "negative" if still else "neutral"

    def pair_negative(self, i: int, u: int, v: int, w: int) -> int:
        """Close the interval killed at arrow ``i`` by deleting an edge of weight ``w``.

        Must be called after the deletion, while ``u`` and ``v`` are still connected.
        """
        wstar = self.msf.path_max_weight(u, v) if u != v else int(hd.NEG)
        j = self.unpaired.successor(max(wstar, w))
        if j is None:
            raise PairingError(f"no open interval to pair with arrow {i}")
        self.unpaired.remove(j)
        return j

    def process_arrow(self, arrow: Arrow, i: int) -> Interval | None:
        s = arrow.simplex
        if s is None or s.dim == 0:
            return None
        if s.dim > 1:
            raise FiltrationError(f"triangle at arrow {i}: dimension 1 needs a graph filtration",
                                  arrow=i, reason="triangle")
        u, v = s.verts
        if arrow.forward:
            self._insert(u, v, i)
            return None
        h = self._handle(u, v)
        w = self.msf.weight(h)
        self.msf.delete_edge(h)
        self.handles[(u, v)].pop()
        if not self.msf.connected(u, v):
            return None
        return Interval(max(self.pair_negative(i, u, v, w), 0), i - 1)

    def finalize(self, m: int) -> list[Interval]:
        return [Interval(max(j, 0), int(m)) for j in self.unpaired]


def with_virtual_prefix(script: GraphScript) -> tuple[np.ndarray, int]:
    """Op table with the initial edges prepended as insertions; returns ``(ops, K)``."""
    init = script.init_edges
    k = int(init.shape[0])
    if k == 0:
        return script.ops, 0
    pre = np.zeros((k, 4), dtype=np.int64)
    pre[:, 0] = zz.ADDE
    pre[:, 1:4] = init
    return np.concatenate([pre, script.ops]), k


def run_script1(script: GraphScript) -> np.ndarray:
    """Dimension-1 intervals of a graph script as an ``(r, 2)`` array."""
    ops, k = with_virtual_prefix(script)
    st = hd.new_state(script.n, script.n_handles, True)
    FW, FP = zz.fenwick(k + script.m)
    n_adde = int(np.count_nonzero(ops[:, 0] == zz.ADDE))
    OUT = np.zeros((n_adde + 1, 2), dtype=np.int64)
    OM = np.zeros(zz.OM_FIELDS, dtype=np.int64)
    status = zz.z1_run(st, FW, FP, OUT, OM, ops, 1 - k, k)
    if status == zz.ERR_NO_PARTNER:
        raise PairingError(f"no open interval to pair with arrow {int(OM[zz.OM_FAIL])}")
    if status != zz.OK:
        raise RuntimeError(f"dimension-1 driver failed at arrow {int(OM[zz.OM_FAIL])}")
    zz.z1_open_intervals(FP, OUT, OM, k, script.m)
    return OUT[: OM[zz.OM_COUNT]]


def compute_barcode1(filt: ZigzagFiltration | GraphScript) -> Barcode:
    """One-dimensional barcode of a graph filtration (triangles are rejected)."""
    script = filt if isinstance(filt, GraphScript) else encode_graph(filt, allow_triangles=False)
    return Barcode.of(1, run_script1(script).tolist())
