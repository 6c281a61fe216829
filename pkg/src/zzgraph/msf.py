"""Fully dynamic minimum spanning forest with path-maximum queries."""

from __future__ import annotations

from . import _hdt
from .connectivity import _DynamicForest


class DynMsf(_DynamicForest):
    """Exact MSF of a multigraph whose live edges carry distinct integer weights.

    An insertion heavier than every weight seen so far costs the same as a
    connectivity update. That is always the case when weights are insertion
    times. A lighter insertion that closes a cycle rebuilds its component.
    """

    _msf = True

    def __init__(self, n_vertices: int, **kw):
        super().__init__(n_vertices, **kw)
        self._weights: dict[int, int] = {}

    def insert_edge(self, u: int, v: int, w: int) -> int:
        w = int(w)
        if w in self._weights:
            raise ValueError(f"weight {w} already used by live edge {self._weights[w]}")
        if abs(w) >= _hdt.INF:
            raise ValueError("weight out of range")
        h = self._insert(u, v, w)
        self._weights[w] = h
        return h

    def delete_edge(self, handle: int) -> None:
        h = self._check_handle(handle)
        del self._weights[int(self._state[1][h, _hdt.EW])]
        _hdt.hdt_delete(self._state, h)

    def weight(self, handle: int) -> int:
        h = self._check_handle(handle)
        return int(self._state[1][h, _hdt.EW])

    def path_max_weight(self, u: int, v: int) -> int:
        """Heaviest weight on the forest path ``u .. v``."""
        if not self.connected(u, v):
            raise ValueError(f"vertices {u} and {v} are not connected")
        if u == v:
            raise ValueError("path from a vertex to itself has no edges")
        return int(_hdt.hdt_path_max(self._state, int(u), int(v)))

    def msf_edges(self) -> list[tuple[int, int, int]]:
        """Debug dump: sorted ``(u, v, w)`` of the current forest, ``u < v``."""
        E = self._state[1][: self._next]
        out = []
        for row in E[E[:, _hdt.ESTATUS] == _hdt.TREE]:
            u, v = sorted((int(row[_hdt.EU]), int(row[_hdt.EV])))
            out.append((u, v, int(row[_hdt.EW])))
        return sorted(out)

    def is_tree_edge(self, handle: int) -> bool:
        h = self._check_handle(handle)
        return int(self._state[1][h, _hdt.ESTATUS]) == _hdt.TREE

    @property
    def rebuilds(self) -> int:
        return int(self._state[5][_hdt.M_REBUILDS])
