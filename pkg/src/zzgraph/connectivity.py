"""Fully dynamic connectivity over a fixed vertex universe (multigraph)."""

from __future__ import annotations

import numpy as np

from . import _hdt


class HandleError(KeyError):
    """Unknown or already-deleted edge handle."""


class _DynamicForest:
    """Shared handle bookkeeping for the connectivity and MSF front ends."""

    _msf = False

    def __init__(self, n_vertices: int, *, edge_capacity: int = 16, seed: int = 0x5EED):
        if n_vertices < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = int(n_vertices)
        self._state = _hdt.new_state(self.n, edge_capacity, self._msf, seed)
        self._next = 0

    def _check_vertex(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for {self.n} vertices")
        return v

    def _check_handle(self, h: int) -> int:
        h = int(h)
        E = self._state[1]
        if not 0 <= h < self._next or E[h, _hdt.ESTATUS] == _hdt.DEAD:
            raise HandleError(f"edge handle {h} is not live")
        return h

    def _insert(self, u: int, v: int, w: int) -> int:
        u, v = self._check_vertex(u), self._check_vertex(v)
        h = self._next
        self._state = _hdt.grow_edges(self._state, h + 1)
        self._next += 1
        _hdt.hdt_insert(self._state, h, u, v, w)
        return h

    def delete_edge(self, handle: int) -> None:
        h = self._check_handle(handle)
        _hdt.hdt_delete(self._state, h)

    def connected(self, u: int, v: int) -> bool:
        u, v = self._check_vertex(u), self._check_vertex(v)
        return bool(_hdt.hdt_connected(self._state, u, v))

    def find(self, v: int) -> int:
        """Component id; equal ids mean same component. Ids may change after any update."""
        return int(_hdt.hdt_find(self._state, self._check_vertex(v)))

    def edge(self, handle: int) -> tuple[int, int]:
        h = self._check_handle(handle)
        E = self._state[1]
        return int(E[h, _hdt.EU]), int(E[h, _hdt.EV])

    def live_edges(self) -> list[int]:
        E = self._state[1][: self._next]
        return [int(h) for h in np.flatnonzero(E[:, _hdt.ESTATUS] != _hdt.DEAD)]

    def components(self) -> list[list[int]]:
        """Debug dump: the vertex partition as sorted lists, sorted by first vertex."""
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(self.find(v), []).append(v)
        return sorted(groups.values())

    def level_profile(self) -> dict[int, int]:
        """Number of live edges per hierarchy level."""
        E = self._state[1][: self._next]
        live = E[E[:, _hdt.ESTATUS] != _hdt.DEAD]
        levels, counts = np.unique(live[:, _hdt.ELEVEL], return_counts=True)
        return {int(a): int(b) for a, b in zip(levels, counts)}

    def check_levels(self) -> None:
        """Assert the hierarchy invariants; raises AssertionError on violation.

        Every level-``i`` tree spans at most ``n / 2**i`` vertices, each
        level-``i`` forest refines the level-``i-1`` forest, and every edge
        sits at a level below the hierarchy depth.
        """
        T, E, M = self._state[0], self._state[1], self._state[5]
        n, L = self.n, self.n_levels
        for i in range(L):
            for v in range(n):
                r = _hdt.t_root(T, i * n + v)
                assert T[r, _hdt.VCNT] <= n >> i, f"level {i} tree of vertex {v} too large"
                if i:
                    same = _hdt.t_root(T, (i - 1) * n + v)
                    for x in range(n):
                        if _hdt.t_root(T, i * n + x) == r:
                            assert _hdt.t_root(T, (i - 1) * n + x) == same, \
                                f"level {i} forest does not refine level {i - 1}"
        live = E[: self._next][E[: self._next, _hdt.ESTATUS] != _hdt.DEAD]
        assert (live[:, _hdt.ELEVEL] < L).all() if len(live) else True
        assert M[_hdt.M_L] == L

    @property
    def n_levels(self) -> int:
        return int(self._state[5][_hdt.M_L])


class DynConn(_DynamicForest):
    """Connectivity under edge insertions and deletions.

    Parallel edges and self-loops are allowed; each insertion returns its own
    handle. Updates cost amortized ``O(log^2 n)``.
    """

    def insert_edge(self, u: int, v: int) -> int:
        return self._insert(u, v, self._next)
