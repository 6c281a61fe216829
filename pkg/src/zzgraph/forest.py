"""Barcode forest: leveled nodes for entrances, splits and the current components."""

from __future__ import annotations

from dataclasses import dataclass

from . import _forest as fo

KIND_NAMES = {fo.LEAF: "leaf", fo.ROOT: "root", fo.SPLIT: "splitting", fo.GONE: "gone"}


@dataclass(frozen=True)
class MergeResult:
    birth: int
    leaf: int
    cross_tree: bool


class BarcodeForest:
    """Forest whose leaves are the current components.

    Interior nodes are unpaired entering roots and unpaired splitting nodes.
    A node is removed as soon as its level closes an interval, which keeps
    every departure scan at one step. Ids of removed nodes are never reused.
    """

    def __init__(self, capacity: int = 64):
        self.F, self.FM, self.FB = fo.new_forest(capacity)

    def _reserve(self, k: int) -> None:
        self.F, self.FM, self.FB = fo.grow_forest(self.F, self.FM, self.FB,
                                                  int(self.FM[fo.FM_COUNT]) + k)

    def _live(self, x: int, *kinds: int) -> int:
        x = int(x)
        if not 0 <= x < self.nodes_created or self.F[x, fo.FKIND] == fo.GONE:
            raise KeyError(f"node {x} is not live")
        if kinds and self.F[x, fo.FKIND] not in kinds:
            raise ValueError(f"node {x} is a {self.kind(x)} node")
        return x

    def new_root(self, level: int) -> int:
        """Entering root at ``level``; returns the leaf of its one-node component."""
        self._reserve(2)
        return int(fo.f_enter(self.F, self.FM, int(level)))

    def split(self, leaf: int, level: int) -> tuple[int, int]:
        self._live(leaf, fo.LEAF)
        self._reserve(2)
        a, b = fo.f_split(self.F, self.FM, leaf, int(level))
        return int(a), int(b)

    def merge(self, leaf1: int, leaf2: int) -> MergeResult:
        """Glue the root paths of two leaves and hang one new leaf at the deepest glued node."""
        self._live(leaf1, fo.LEAF)
        self._live(leaf2, fo.LEAF)
        if leaf1 == leaf2:
            raise ValueError("cannot merge a leaf with itself")
        self._reserve(1)
        birth, leaf, cross = fo.f_merge(self.F, self.FM, self.FB, leaf1, leaf2)
        return MergeResult(int(birth), int(leaf), bool(cross))

    def departure_scan(self, leaf: int) -> tuple[int, str]:
        """Remove ``leaf``. Returns the level and kind of the ancestor that pairs with it."""
        self._live(leaf, fo.LEAF)
        p = int(self.F[leaf, fo.FPAR])
        level = int(self.F[p, fo.FLVL])
        kind = KIND_NAMES[int(self.F[p, fo.FKIND])]
        fo.f_depart(self.F, self.FM, leaf)
        return level, kind

    def root_of(self, x: int) -> tuple[int, int]:
        r = int(fo.f_root(self.F, self._live(x)))
        return r, int(self.F[r, fo.FLVL])

    def nca(self, x: int, y: int) -> int:
        v = int(fo.f_nca(self.F, self._live(x), self._live(y)))
        if v == -1:
            raise ValueError(f"nodes {x} and {y} are in different trees")
        return v

    def kind(self, x: int) -> str:
        return KIND_NAMES[int(self.F[int(x), fo.FKIND])]

    def level(self, x: int) -> int | None:
        x = self._live(x)
        return None if self.F[x, fo.FKIND] == fo.LEAF else int(self.F[x, fo.FLVL])

    def parent(self, x: int) -> int | None:
        p = int(self.F[self._live(x), fo.FPAR])
        return None if p == -1 else p

    def leaves(self) -> list[int]:
        n = self.nodes_created
        return [x for x in range(n) if self.F[x, fo.FKIND] == fo.LEAF]

    def open_intervals(self, m: int) -> list[tuple[int, int]]:
        out = []
        for x in range(self.nodes_created):
            kind = self.F[x, fo.FKIND]
            if kind == fo.ROOT:
                out.append((int(self.F[x, fo.FLVL]), m))
            elif kind == fo.SPLIT:
                out.append((int(self.F[x, fo.FLVL]) + 1, m))
        return out

    def dump(self) -> list[tuple[int, int | None, int | None, str]]:
        """Debug table of live nodes: ``(id, parent, level, kind)``."""
        rows = []
        for x in range(self.nodes_created):
            if self.F[x, fo.FKIND] != fo.GONE:
                rows.append((x, self.parent(x), self.level(x), self.kind(x)))
        return rows

    def check(self) -> None:
        """Assert the structural invariants; raises AssertionError on violation."""
        F = self.F
        n_roots = 0
        for x in range(self.nodes_created):
            kind = F[x, fo.FKIND]
            if kind == fo.GONE:
                continue
            kids = [int(c) for c in (F[x, fo.FCH0], F[x, fo.FCH1]) if c != -1]
            for c in kids:
                assert F[c, fo.FPAR] == x, f"child {c} of {x} points elsewhere"
                assert F[c, fo.FKIND] != fo.GONE, f"node {x} has a removed child"
                assert fo._order_key(F, x) < fo._order_key(F, c), f"level order broken at {x}"
            expected = {fo.LEAF: 0, fo.ROOT: 1, fo.SPLIT: 2}[kind]
            assert len(kids) == expected, f"{self.kind(x)} node {x} has {len(kids)} children"
            p = F[x, fo.FPAR]
            if kind == fo.ROOT:
                n_roots += 1
                assert p == -1, f"root {x} has a parent"
            else:
                assert p != -1 and F[p, fo.FKIND] != fo.GONE, f"node {x} is detached"
        assert n_roots == self.n_trees, "tree counter out of sync"

    @property
    def nodes_created(self) -> int:
        return int(self.FM[fo.FM_COUNT])

    @property
    def scan_visits(self) -> int:
        return int(self.FM[fo.FM_VISITS])

    @property
    def n_trees(self) -> int:
        return int(self.FM[fo.FM_TREES])
