"""Integer op tables that the compiled drivers consume."""

from __future__ import annotations

import gc
from dataclasses import dataclass

import numpy as np

from ._zigzag import ADDE, ADDV, DELE, DELV, NOOP
from .filtration import FiltrationError, ZigzagFiltration

OP_NAMES = {NOOP: "nop", ADDV: "+v", DELV: "-v", ADDE: "+e", DELE: "-e"}


@dataclass(frozen=True)
class GraphScript:
    """A graph filtration over compact vertex ids ``0..n-1``.

    ``ops[r] = (op, a, b, handle)`` is arrow ``r + 1``. Edge handles are
    allocated per insertion; the initial edges own handles ``0..K-1``.
    """

    n: int
    ops: np.ndarray
    init_vertices: np.ndarray
    init_edges: np.ndarray  # (K, 3): u, v, handle
    n_handles: int
    labels: tuple[int, ...] = ()  # compact id -> original vertex id

    @property
    def m(self) -> int:
        return int(self.ops.shape[0])

    def count(self, op: int) -> int:
        return int(np.count_nonzero(self.ops[:, 0] == op))


class ScriptBuilder:
    """Incremental construction of a :class:`GraphScript`.

    Edges are named by endpoints; parallel copies are distinguished by a
    caller key, so multigraphs (dual graphs) round-trip correctly.
    """

    def __init__(self, n: int):
        self.n = int(n)
        self._ops: list[tuple[int, int, int, int]] = []
        self._init_v: list[int] = []
        self._init_e: list[tuple[int, int, int]] = []
        self._live: dict = {}
        self._next = 0

    def _handle(self, key, u, v) -> int:
        if key in self._live:
            raise ValueError(f"edge {key!r} is already present")
        h = self._next
        self._next += 1
        self._live[key] = (h, u, v)
        return h

    def initial_vertex(self, v: int) -> None:
        if self._ops:
            raise ValueError("initial graph must be declared before arrows")
        self._init_v.append(v)

    def initial_edge(self, u: int, v: int, key=None) -> int:
        if self._ops:
            raise ValueError("initial graph must be declared before arrows")
        key = (min(u, v), max(u, v)) if key is None else key
        h = self._handle(key, u, v)
        self._init_e.append((u, v, h))
        return h

    def nop(self) -> None:
        self._ops.append((NOOP, 0, 0, 0))

    def add_vertex(self, v: int) -> None:
        self._ops.append((ADDV, v, 0, 0))

    def remove_vertex(self, v: int) -> None:
        self._ops.append((DELV, v, 0, 0))

    def add_edge(self, u: int, v: int, key=None) -> int:
        key = (min(u, v), max(u, v)) if key is None else key
        h = self._handle(key, u, v)
        self._ops.append((ADDE, u, v, h))
        return h

    def remove_edge(self, u: int, v: int, key=None) -> int:
        key = (min(u, v), max(u, v)) if key is None else key
        if key not in self._live:
            raise ValueError(f"edge {key!r} is not present")
        h, a, b = self._live.pop(key)
        self._ops.append((DELE, a, b, h))
        return h

    def build(self, labels=()) -> GraphScript:
        ops = np.array(self._ops, dtype=np.int64).reshape(-1, 4)
        return GraphScript(
            n=self.n,
            ops=ops,
            init_vertices=np.array(self._init_v, dtype=np.int64),
            init_edges=np.array(self._init_e, dtype=np.int64).reshape(-1, 3),
            n_handles=self._next,
            labels=tuple(labels),
        )


def encode_graph(filt: ZigzagFiltration, *, allow_triangles: bool = True) -> GraphScript:
    """Encode the 1-skeleton of ``filt``. Triangle arrows become no-ops.

    With ``allow_triangles=False`` a triangle anywhere raises
    :class:`FiltrationError`.
    """
    # The encoder allocates millions of short-lived tuples and no cycles; the
    # cyclic collector would rescan the whole filtration heap many times.
    enabled = gc.isenabled()
    gc.disable()
    try:
        return _encode(filt, allow_triangles)
    finally:
        if enabled:
            gc.enable()


def _encode(filt: ZigzagFiltration, allow_triangles: bool) -> GraphScript:
    labels = filt.vertex_ids()
    if filt.n_vertices is not None:
        labels = sorted(set(labels) | set(range(filt.n_vertices)))
    index = {v: i for i, v in enumerate(labels)}
    init_v: list[int] = []
    init_e: list[tuple[int, int, int]] = []
    live: dict[tuple[int, int], int] = {}
    for s in filt.initial:
        vs = s.verts
        if len(vs) == 1:
            init_v.append(index[vs[0]])
        elif len(vs) == 2:
            key = (index[vs[0]], index[vs[1]])
            if key in live:
                raise ValueError(f"edge {key!r} is already present")
            live[key] = len(init_e)
            init_e.append((key[0], key[1], len(init_e)))
        elif not allow_triangles:
            raise FiltrationError("triangle in the initial complex", reason="triangle")

    # Sorted labels keep compact ids in order, so (u, v) is already the edge key.
    n_handles = len(init_e)
    ops: list[tuple[int, int, int, int]] = []
    push = ops.append
    nop = (NOOP, 0, 0, 0)
    for k, arrow in enumerate(filt.arrows, start=1):
        s = arrow.simplex
        if s is None:
            push(nop)
            continue
        vs = s.verts
        if len(vs) == 1:
            push((ADDV if arrow.forward else DELV, index[vs[0]], 0, 0))
        elif len(vs) == 2:
            key = (index[vs[0]], index[vs[1]])
            if arrow.forward:
                if key in live:
                    raise ValueError(f"edge {key!r} is already present")
                live[key] = n_handles
                push((ADDE, key[0], key[1], n_handles))
                n_handles += 1
            else:
                h = live.pop(key, None)
                if h is None:
                    raise ValueError(f"edge {key!r} is not present")
                push((DELE, key[0], key[1], h))
        elif not allow_triangles:
            raise FiltrationError(f"triangle at arrow {k}: dimension 1 needs a graph filtration",
                                  arrow=k, reason="triangle")
        else:
            push(nop)
    return GraphScript(
        n=len(labels),
        ops=np.array(ops, dtype=np.int64).reshape(-1, 4),
        init_vertices=np.array(init_v, dtype=np.int64),
        init_edges=np.array(init_e, dtype=np.int64).reshape(-1, 3),
        n_handles=n_handles,
        labels=tuple(labels),
    )
