"""Slow, direct implementations used as test oracles."""

from __future__ import annotations

from collections import defaultdict

from .barcode import Barcode
from .filtration import ZigzagFiltration


def bfs_components(n: int, edges) -> list[int]:
    """Component label per vertex ``0..n-1`` (smallest vertex of the component)."""
    adj = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    label = [-1] * n
    for s in range(n):
        if label[s] != -1:
            continue
        label[s] = s
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if label[y] == -1:
                    label[y] = s
                    stack.append(y)
    return label


def partition(n: int, edges) -> list[list[int]]:
    groups = defaultdict(list)
    for v, c in enumerate(bfs_components(n, edges)):
        groups[c].append(v)
    return sorted(groups.values())


def kruskal(n: int, weighted_edges) -> list[tuple[int, int, int]]:
    """Minimum spanning forest of ``(u, v, w)`` edges as sorted ``(min, max, w)`` triples."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    out = []
    for u, v, w in sorted(weighted_edges, key=lambda e: e[2]):
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            out.append((min(u, v), max(u, v), w))
    return sorted(out)


def path_max(forest_edges, u: int, v: int) -> int | None:
    """Heaviest weight on the ``u``-``v`` path of a forest, None if disconnected."""
    adj = defaultdict(list)
    for a, b, w in forest_edges:
        adj[a].append((b, w))
        adj[b].append((a, w))
    best = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            return best[x]
        for y, w in adj[x]:
            if y not in best:
                best[y] = w if best[x] is None else max(best[x], w)
                stack.append(y)
    return None


def union_find_persistence0(filt: ZigzagFiltration) -> Barcode:
    """Elder-rule barcode of an insertion-only filtration."""
    parent: dict[int, int] = {}
    birth: dict[int, int] = {}
    out = []

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, a in enumerate(filt.arrows, start=1):
        s = a.simplex
        if s is None or s.dim > 1:
            continue
        if not a.forward:
            raise ValueError("insertion-only filtration expected")
        if s.dim == 0:
            v = s.verts[0]
            parent[v] = v
            birth[v] = k
            continue
        x, y = find(s.verts[0]), find(s.verts[1])
        if x == y:
            continue
        if birth[x] < birth[y]:
            x, y = y, x
        out.append((birth[x], k - 1))
        parent[x] = y
    out += [(birth[r], filt.m) for r in {find(v) for v in parent}]
    return Barcode.of(0, out)


class LeveledForest:
    """Barcode forest with one node per component per index.

    A direct transcription of the event rules: every index copies all
    leaves, paths are glued node by node, and departing paths are deleted.
    Quadratic in the worst case.
    """

    def __init__(self):
        self.parent: dict[int, int | None] = {}
        self.level: dict[int, int] = {}
        self.children: dict[int, set[int]] = {}
        self._next = 0

    def node(self, level: int, parent: int | None) -> int:
        x = self._next
        self._next += 1
        self.parent[x] = parent
        self.level[x] = level
        self.children[x] = set()
        if parent is not None:
            self.children[parent].add(x)
        return x

    def remove(self, x: int) -> None:
        p = self.parent.pop(x)
        if p is not None:
            self.children[p].discard(x)
        del self.level[x], self.children[x]

    def path(self, x: int) -> list[int]:
        """``x`` and its ancestors, leafward first."""
        out = [x]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out

    def splitting(self, x: int) -> bool:
        return len(self.children[x]) >= 2

    def depart(self, u: int) -> int:
        path = self.path(u)
        split = [x for x in path[1:] if self.splitting(x)]
        if split:
            v = max(split, key=self.level.__getitem__)
            birth = self.level[v] + 1
            doomed = path[: path.index(v)]
        else:
            birth = self.level[path[-1]]
            doomed = path
        for x in doomed:
            self.remove(x)
        return birth

    def glue(self, keep: int, drop: int) -> None:
        for c in list(self.children[drop]):
            self.children[drop].discard(c)
            self.parent[c] = keep
            self.children[keep].add(c)
        self.remove(drop)

    def merge(self, u1: int, u2: int) -> tuple[int, int]:
        """Glue the paths of two leaves; return ``(birth, glued leaf)``."""
        p1, p2 = self.path(u1), self.path(u2)
        if p1[-1] != p2[-1]:
            if self.level[p1[-1]] > self.level[p2[-1]]:
                p1, p2 = p2, p1
            j = self.level[p2[-1]]
            birth = j
        else:
            common = set(p1) & set(p2)
            j = max(self.level[x] for x in common)
            birth = j + 1
        a = [x for x in p1 if self.level[x] >= j]
        b = [x for x in p2 if self.level[x] >= j]
        for x, y in zip(a, b):
            if x != y:
                self.glue(x, y)
        return birth, p1[0]

    def open_intervals(self, m: int) -> list[tuple[int, int]]:
        out = []
        for x, lvl in self.level.items():
            if self.parent[x] is None:
                out.append((lvl, m))
            if self.splitting(x):
                out.append((lvl + 1, m))
        return out


def leveled_forest_barcode0(filt: ZigzagFiltration) -> Barcode:
    """Zero-dimensional barcode through :class:`LeveledForest` and BFS components."""
    labels = filt.vertex_ids()
    index = {v: i for i, v in enumerate(labels)}
    n = len(labels)
    present: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for s in filt.initial:
        if s.dim == 0:
            present.add(index[s.verts[0]])
        elif s.dim == 1:
            edges.add((index[s.verts[0]], index[s.verts[1]]))

    def components():
        lab = bfs_components(n, edges)
        groups = defaultdict(set)
        for v in present:
            groups[lab[v]].add(v)
        return [frozenset(g) for g in groups.values()]

    forest = LeveledForest()
    leaf = {c: forest.node(0, None) for c in components()}
    out = []
    for i, a in enumerate(filt.arrows):
        s = a.simplex
        if s is not None and s.dim <= 1:
            ids = tuple(index[x] for x in s.verts)
            if s.dim == 0:
                (present.add if a.forward else present.discard)(ids[0])
            else:
                (edges.add if a.forward else edges.discard)(ids)
        new = components()
        old_to_new = {c: [d for d in new if c & d] for c in leaf}
        new_to_old = {d: [c for c in leaf if c & d] for d in new}
        nxt = {}
        for c, ds in old_to_new.items():
            if not ds:
                out.append((forest.depart(leaf[c]), i))
        for d, cs in new_to_old.items():
            if not cs:
                nxt[d] = forest.node(i + 1, None)
            elif len(cs) == 2:
                birth, glued = forest.merge(leaf[cs[0]], leaf[cs[1]])
                out.append((birth, i))
                nxt[d] = forest.node(i + 1, glued)
            else:
                nxt[d] = forest.node(i + 1, leaf[cs[0]])
        leaf = nxt
    out += forest.open_intervals(filt.m)
    return Barcode.of(0, out)
