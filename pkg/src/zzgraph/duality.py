"""Codimension-one barcodes of embedded complexes through dual graph filtrations.

For a complex ``K`` in ``R^p`` the ``(p-1)``-simplices are split into
``(p-1)``-connected classes. Each class, closed up with the ``p``-simplices
whose facets it contains, has a dual graph: one vertex per void and per
``p``-simplex, one edge per ``(p-1)``-simplex. A primal arrow on a dual
element becomes the opposite arrow in the dual. The ``(p-1)``-th barcode of
the primal filtration is the union of the zero-dimensional barcodes of the
dual filtrations, each with one ``[0, m]`` removed.

Dual graphs are built automatically for ``p = 2`` by face tracing; for
larger ``p`` they must be supplied.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .barcode import Barcode
from .filtration import Arrow, FiltrationError, Simplex, ZigzagFiltration, validate
from .planar import (EmbeddingError, on_segment, orient, point_in_triangle, segments_conflict,
                     trace_faces, validate_embedding)
from .script import GraphScript, ScriptBuilder
from .zigzag0 import run_script0


class DualityError(RuntimeError):
    """The dual construction broke an invariant (for example no ``[0, m]`` interval)."""


class _DisjointSets:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def q_connected_components(simplices: Iterable[Simplex], q: int) -> list[frozenset[Simplex]]:
    """Classes of ``q``-simplices linked through shared ``(q-1)``-faces, sorted by smallest member."""
    if q < 1:
        raise ValueError("q must be at least 1")
    qs = sorted({s for s in simplices if s.dim == q})
    ds = _DisjointSets()
    owner: dict[Simplex, Simplex] = {}
    for s in qs:
        ds.find(s)
        for f in s.faces():
            if f.dim != q - 1:
                continue
            if f in owner:
                ds.union(s, owner[f])
            else:
                owner[f] = s
    groups: dict[Simplex, list[Simplex]] = {}
    for s in qs:
        groups.setdefault(ds.find(s), []).append(s)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def _closure(simplices: Iterable[Simplex]) -> set[Simplex]:
    out: set[Simplex] = set()
    for s in simplices:
        out.add(s)
        out.update(s.faces())
    return out


def component_closure(simplices: Iterable[Simplex], component: Iterable[Simplex]) -> frozenset[Simplex]:
    """Closure of a class of ``(p-1)``-simplices plus every ``p``-simplex whose facets all lie in it."""
    component = frozenset(component)
    if not component:
        return frozenset()
    p = next(iter(component)).dim + 1
    top = [t for t in simplices if t.dim == p
           and all(f in component for f in t.faces() if f.dim == p - 1)]
    return frozenset(_closure(component) | set(top))


def restrict_filtration(filt: ZigzagFiltration, sub: Iterable[Simplex]) -> ZigzagFiltration:
    """Arrows on simplices outside ``sub`` become no-ops; indices are preserved."""
    sub = frozenset(sub)
    arrows = tuple(a if a.simplex is not None and a.simplex in sub else Arrow(a.forward, None)
                   for a in filt.arrows)
    init = tuple(s for s in filt.initial if s in sub)
    coords = {v: c for v, c in filt.coords.items() if Simplex((v,)) in sub}
    return ZigzagFiltration(arrows, init, filt.dim, filt.n_vertices, coords)


@dataclass(frozen=True)
class DualComplex:
    """Dual graph of a closed class ``hat_c`` of an embedded complex.

    Dual vertices are ``0..n_dual-1``. ``voids`` lists the void vertices;
    ``top_vertex`` maps each ``p``-simplex to its dual vertex and
    ``edge_ends`` maps each ``(p-1)``-simplex to the two dual vertices on
    either side (equal for a simplex with the same void on both sides).
    """

    p: int
    n_dual: int
    voids: tuple[int, ...]
    top_vertex: Mapping[Simplex, int]
    edge_ends: Mapping[Simplex, tuple[int, int]]
    hat_c: frozenset[Simplex] = field(default_factory=frozenset)
    outer: int | None = None

    def __post_init__(self):
        seen = set(self.voids) | set(self.top_vertex.values())
        if len(seen) != len(self.voids) + len(self.top_vertex) or seen != set(range(self.n_dual)):
            raise ValueError("dual vertices must be exactly 0..n_dual-1, each used once")
        for s, (a, b) in self.edge_ends.items():
            if s.dim != self.p - 1:
                raise ValueError(f"dual edge for {s}, which is not a {self.p - 1}-simplex")
            if not (0 <= a < self.n_dual and 0 <= b < self.n_dual):
                raise ValueError(f"dual edge for {s} has an endpoint out of range")
        for t in self.top_vertex:
            if t.dim != self.p:
                raise ValueError(f"dual vertex for {t}, which is not a {self.p}-simplex")
        if not self.hat_c:
            hat = _closure(list(self.edge_ends) + list(self.top_vertex))
            object.__setattr__(self, "hat_c", frozenset(hat))

    def dual_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edge_ends.values())


def planar_dual_graph(hat_c: Iterable[Simplex], coords: Mapping[int, tuple[int, int]], *,
                      check: bool = True) -> DualComplex:
    """Dual graph of a 1-connected closed class embedded in the plane."""
    hat_c = frozenset(hat_c)
    edges = [s for s in hat_c if s.dim == 1]
    tris = {s for s in hat_c if s.dim == 2}
    if any(s.dim > 2 for s in hat_c):
        raise EmbeddingError("planar duals need a complex of dimension at most 2")
    if check:
        validate_embedding(coords, hat_c)
    tr = trace_faces(coords, edges)
    face_vertex: dict[int, int] = {}
    top_vertex: dict[Simplex, int] = {}
    voids: list[int] = []
    tri_faces = {}
    for f, walk in enumerate(tr.faces):
        if f != tr.outer and len(walk) == 3:
            t = Simplex(tuple(sorted(walk)))
            if t in tris:
                tri_faces[f] = t
    if len(tri_faces) != len(tris):
        raise EmbeddingError("some triangle does not bound a face of its class")
    for f in range(len(tr.faces)):
        face_vertex[f] = len(face_vertex)
        if f in tri_faces:
            top_vertex[tri_faces[f]] = face_vertex[f]
        else:
            voids.append(face_vertex[f])
    edge_ends = {}
    for e in edges:
        u, v = e.verts
        edge_ends[e] = (face_vertex[tr.left[(u, v)]], face_vertex[tr.left[(v, u)]])
    return DualComplex(2, len(face_vertex), tuple(voids), top_vertex, edge_ends, hat_c,
                       outer=face_vertex[tr.outer])


def dual_filtration(filt: ZigzagFiltration, dual: DualComplex) -> GraphScript:
    """Dual graph filtration as a script, starting from the dual of ``K_0``.

    Arrows on ``(p-1)``- and ``p``-simplices of the class flip direction on
    their dual element; every other arrow is a no-op, so indices match ``filt``.
    """
    p = dual.p
    sb = ScriptBuilder(dual.n_dual)
    k0 = set(filt.initial)
    filled = {dual.top_vertex[t] for t in k0 if t in dual.top_vertex}
    for v in range(dual.n_dual):
        if v not in filled:
            sb.initial_vertex(v)
    for s, (a, b) in sorted(dual.edge_ends.items()):
        if s not in k0:
            sb.initial_edge(a, b, key=s)
    for arrow in filt.arrows:
        s = arrow.simplex
        if s is not None and s.dim == p - 1 and s in dual.edge_ends:
            a, b = dual.edge_ends[s]
            if arrow.forward:
                sb.remove_edge(a, b, key=s)
            else:
                sb.add_edge(a, b, key=s)
        elif s is not None and s.dim == p and s in dual.top_vertex:
            (sb.remove_vertex if arrow.forward else sb.add_vertex)(dual.top_vertex[s])
        else:
            sb.nop()
    return sb.build()


@dataclass
class CodimStats:
    components: int = 0
    dual_changes: int = 0


def build_duals(filt: ZigzagFiltration) -> list[DualComplex]:
    """One planar dual per 1-connected class of the ground complex of ``filt``."""
    ground = filt.simplices()
    if any(s.dim > 2 for s in ground):
        raise EmbeddingError("automatic duals are only available in the plane")
    validate_embedding(filt.coords, ground)
    return [planar_dual_graph(component_closure(ground, c), filt.coords, check=False)
            for c in q_connected_components(ground, 1)]


def compute_codim1(filt: ZigzagFiltration, duals: Sequence[DualComplex] | None = None, *,
                   stats: CodimStats | None = None) -> Barcode:
    """The ``(p-1)``-th barcode; duals default to planar face tracing (``p = 2``)."""
    validate(filt)
    if duals is None:
        duals = build_duals(filt)
    if not duals:
        s = next((a.simplex for a in filt.arrows if a.simplex is not None and a.simplex.dim), None)
        if s is not None:
            raise ValueError(f"no dual graph covers {s}")
        return Barcode(1)
    p = duals[0].p
    if any(d.p != p for d in duals):
        raise ValueError("all duals must share the ambient dimension")
    claimed: dict[Simplex, int] = {}
    for idx, d in enumerate(duals):
        for s in d.edge_ends:
            if s in claimed:
                raise ValueError(f"{s} belongs to two dual graphs")
            claimed[s] = idx
    for a in filt.arrows:
        s = a.simplex
        if s is not None and s.dim == p - 1 and s not in claimed:
            raise ValueError(f"no dual graph covers {s}")
    m = filt.m
    out = []
    for d in duals:
        script = dual_filtration(filt, d)
        ivs = [tuple(r) for r in run_script0(script).tolist()]
        try:
            ivs.remove((0, m))
        except ValueError:
            raise DualityError("a dual filtration has no [0, m] interval") from None
        out += ivs
        if stats is not None:
            stats.components += 1
            stats.dual_changes += script.m - script.count(0)
    return Barcode.of(p - 1, out)


def parse_dual_file(text: str) -> list[DualComplex]:
    """Caller-supplied duals.

    ::

        component P          # starts a dual graph for ambient dimension P
        voids V              # dual vertices 0..V-1 are voids
        dualv ID a b c ...   # dual vertex ID is the P-simplex a b c ...
        duale A B a b ...    # dual edge A-B is the (P-1)-simplex a b ...
    """
    duals: list[DualComplex] = []
    cur: dict | None = None

    def flush():
        if cur is not None:
            n = cur["voids"] + len(cur["top"])
            duals.append(DualComplex(cur["p"], n, tuple(range(cur["voids"])), cur["top"], cur["edges"]))

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "component":
                flush()
                cur = {"p": int(tok[1]), "voids": 0, "top": {}, "edges": {}}
            elif cur is None:
                raise ValueError("expected a 'component' line first")
            elif tok[0] == "voids":
                cur["voids"] = int(tok[1])
            elif tok[0] == "dualv":
                cur["top"][Simplex(tuple(sorted(int(x) for x in tok[2:])))] = int(tok[1])
            elif tok[0] == "duale":
                s = Simplex(tuple(sorted(int(x) for x in tok[3:])))
                cur["edges"][s] = (int(tok[1]), int(tok[2]))
            else:
                raise ValueError(f"unknown keyword {tok[0]!r}")
        except (ValueError, IndexError) as exc:
            raise FiltrationError(f"line {ln}: {exc}", line=ln, reason="syntax") from None
    flush()
    return duals


def format_dual_file(duals: Sequence[DualComplex]) -> str:
    lines = []
    for d in duals:
        # renumber so that voids come first
        order = list(d.voids) + sorted(d.top_vertex.values())
        new = {old: i for i, old in enumerate(order)}
        lines.append(f"component {d.p}")
        lines.append(f"voids {len(d.voids)}")
        for t, v in sorted(d.top_vertex.items()):
            lines.append(f"dualv {new[v]} " + " ".join(map(str, t.verts)))
        for s, (a, b) in sorted(d.edge_ends.items()):
            lines.append(f"duale {new[a]} {new[b]} " + " ".join(map(str, s.verts)))
    return "\n".join(lines) + ("\n" if lines else "")


# random planar instances


def random_planar_complex(n_vertices: int, seed: int, *, grid: int | None = None,
                          edge_tries: int | None = None) -> tuple[dict[int, tuple[int, int]], list[Simplex]]:
    """Random non-crossing straight-line complex: points, edges and all empty triangles."""
    rng = random.Random(seed)
    grid = grid or max(4, 3 * n_vertices)
    cells = rng.sample(range(grid * grid), n_vertices)
    coords = {v: (c % grid, c // grid) for v, c in enumerate(cells)}
    pairs = [(u, v) for u in range(n_vertices) for v in range(u + 1, n_vertices)]
    rng.shuffle(pairs)
    if edge_tries is not None:
        pairs = pairs[:edge_tries]
    edges: list[tuple[int, int]] = []
    for u, v in pairs:
        a, b = coords[u], coords[v]
        if any(w not in (u, v) and orient(a, b, coords[w]) == 0 and on_segment(a, b, coords[w])
               for w in coords):
            continue
        if any(segments_conflict(a, b, coords[x], coords[y]) for x, y in edges):
            continue
        edges.append((u, v))
    eset = {frozenset(e) for e in edges}
    adj: dict[int, set[int]] = {v: set() for v in coords}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    tris = []
    for u, v in edges:
        for w in adj[u] & adj[v]:
            if w > max(u, v) and frozenset((u, w)) in eset:
                a, b, c = coords[u], coords[v], coords[w]
                if orient(a, b, c) != 0 and not any(
                        point_in_triangle(coords[x], a, b, c) for x in coords if x not in (u, v, w)):
                    tris.append(Simplex(tuple(sorted((u, v, w)))))
    simplices = [Simplex((v,)) for v in coords] + [Simplex(tuple(sorted(e))) for e in edges] + tris
    return coords, simplices


def generate_planar(n_vertices: int, m: int, seed: int, *, triangles: bool = True,
                    p_forward: float = 0.6, grid: int | None = None) -> ZigzagFiltration:
    """Seeded zigzag filtration over a random planar ground complex."""
    coords, ground = random_planar_complex(n_vertices, seed, grid=grid)
    if not triangles:
        ground = [s for s in ground if s.dim < 2]
    rng = random.Random(seed ^ 0x9E3779B9)
    cofaces: dict[Simplex, list[Simplex]] = {s: [] for s in ground}
    for s in ground:
        for f in s.faces():
            if f.dim == s.dim - 1:
                cofaces[f].append(s)
    present: set[Simplex] = set()
    arrows: list[Arrow] = []
    for _ in range(m):
        addable = [s for s in ground if s not in present
                   and all(f in present for f in s.faces())]
        removable = [s for s in present if not any(c in present for c in cofaces[s])]
        forward = rng.random() < p_forward
        if forward and not addable:
            forward = False
        if not forward and not removable:
            forward = True
        if forward and not addable:
            break
        pool = sorted(addable if forward else removable)
        s = pool[rng.randrange(len(pool))]
        (present.add if forward else present.discard)(s)
        arrows.append(Arrow(forward, s))
    dim = 2 if any(s.dim == 2 for s in ground) else 1
    return ZigzagFiltration(tuple(arrows), (), dim, None, coords)
