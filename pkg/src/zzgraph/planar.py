"""Exact planar geometry for straight-line embedded 2-complexes.

All predicates use integer arithmetic, so coordinates must be integers.
Vectorized checks use int64 and require ``|coordinate| <= 2**30``; larger
inputs fall back to Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Mapping

import numpy as np

from .filtration import Simplex

_VEC_LIMIT = 2**30


class EmbeddingError(ValueError):
    """Coordinates missing, or the straight-line drawing is not an embedding."""


def orient(a, b, c) -> int:
    """Sign of the turn ``a -> b -> c``: +1 left, -1 right, 0 collinear."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return int(v > 0) - int(v < 0)


def on_segment(a, b, p) -> bool:
    """``p`` collinear with ``a b`` and inside its bounding box."""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_conflict(a, b, c, d) -> bool:
    """True when segments ``ab`` and ``cd`` meet anywhere other than a shared endpoint."""
    shared = {tuple(a), tuple(b)} & {tuple(c), tuple(d)}
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if len(shared) == 2:
        return True
    if len(shared) == 1:
        # only overlap along a common line can conflict
        if o1 == 0 and o2 == 0:
            s = next(iter(shared))
            oa = b if tuple(a) == s else a
            oc = d if tuple(c) == s else c
            same_dir = ((oa[0] - s[0]) * (oc[0] - s[0]) + (oa[1] - s[1]) * (oc[1] - s[1])) > 0
            return same_dir
        return False
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    if o1 == 0 and on_segment(a, b, c):
        return True
    if o2 == 0 and on_segment(a, b, d):
        return True
    if o3 == 0 and on_segment(c, d, a):
        return True
    if o4 == 0 and on_segment(c, d, b):
        return True
    return False


def point_in_triangle(p, a, b, c) -> bool:
    """``p`` strictly inside triangle ``abc``."""
    o = orient(a, b, c)
    return orient(a, b, p) == o and orient(b, c, p) == o and orient(c, a, p) == o and o != 0


def _crossing_pairs_np(P: np.ndarray, E: np.ndarray) -> tuple[int, int] | None:
    """First conflicting edge pair found by a vectorized scan, or None."""
    for i in range(E.shape[0] - 1):
        a, b = P[E[i, 0]], P[E[i, 1]]
        rest = E[i + 1:]
        c, d = P[rest[:, 0]], P[rest[:, 1]]

        def ori(x, y, z):
            v = (y[..., 0] - x[..., 0]) * (z[..., 1] - x[..., 1]) - \
                (y[..., 1] - x[..., 1]) * (z[..., 0] - x[..., 0])
            return np.sign(v)

        o1, o2 = ori(a, b, c), ori(a, b, d)
        o3, o4 = ori(c, d, a), ori(c, d, b)
        proper = (o1 * o2 < 0) & (o3 * o4 < 0)
        touch = (o1 == 0) | (o2 == 0) | (o3 == 0) | (o4 == 0)
        hit = np.flatnonzero(proper)
        if hit.size:
            return i, i + 1 + int(hit[0])
        for j in np.flatnonzero(touch):
            k = i + 1 + int(j)
            pa, pb = tuple(a.tolist()), tuple(b.tolist())
            if segments_conflict(pa, pb, tuple(P[E[k, 0]].tolist()), tuple(P[E[k, 1]].tolist())):
                return i, k
    return None


def validate_embedding(coords: Mapping[int, tuple[int, int]],
                       simplices: Iterable[Simplex]) -> None:
    """Raise :class:`EmbeddingError` unless the straight-line drawing is an embedding.

    Checks distinct vertex positions, no two edges meeting except at a
    shared endpoint, no vertex inside an edge, and no vertex strictly inside
    a triangle.
    """
    simplices = list(simplices)
    verts = sorted({v for s in simplices for v in s.verts})
    missing = [v for v in verts if v not in coords]
    if missing:
        raise EmbeddingError(f"vertices without coordinates: {missing[:5]}")
    pts = {v: tuple(int(x) for x in coords[v]) for v in verts}
    seen: dict[tuple[int, int], int] = {}
    for v, p in pts.items():
        if p in seen:
            raise EmbeddingError(f"vertices {seen[p]} and {v} share position {p}")
        seen[p] = v
    edges = sorted({s for s in simplices if s.dim == 1})
    tris = sorted({s for s in simplices if s.dim == 2})
    for t in tris:
        a, b, c = (pts[x] for x in t.verts)
        if orient(a, b, c) == 0:
            raise EmbeddingError(f"triangle {t} is degenerate")
    for e in edges:
        a, b = pts[e.verts[0]], pts[e.verts[1]]
        for v, p in pts.items():
            if v not in e.verts and orient(a, b, p) == 0 and on_segment(a, b, p):
                raise EmbeddingError(f"vertex {v} lies on edge {e}")
    big = any(abs(x) > _VEC_LIMIT for p in pts.values() for x in p)
    if edges and not big:
        index = {v: i for i, v in enumerate(verts)}
        P = np.array([pts[v] for v in verts], dtype=np.int64)
        E = np.array([[index[e.verts[0]], index[e.verts[1]]] for e in edges], dtype=np.int64)
        hit = _crossing_pairs_np(P, E)
        if hit is not None:
            raise EmbeddingError(f"edges {edges[hit[0]]} and {edges[hit[1]]} cross")
    else:
        for i, e in enumerate(edges):
            a, b = pts[e.verts[0]], pts[e.verts[1]]
            for f in edges[i + 1:]:
                if segments_conflict(a, b, pts[f.verts[0]], pts[f.verts[1]]):
                    raise EmbeddingError(f"edges {e} and {f} cross")
    for t in tris:
        a, b, c = (pts[x] for x in t.verts)
        for v, p in pts.items():
            if v not in t.verts and point_in_triangle(p, a, b, c):
                raise EmbeddingError(f"vertex {v} lies inside triangle {t}")


def _half(d) -> int:
    """0 for directions in ``[0, pi)``, 1 for ``[pi, 2 pi)``."""
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def _angle_cmp(d1, d2) -> int:
    h1, h2 = _half(d1), _half(d2)
    if h1 != h2:
        return h1 - h2
    c = d1[0] * d2[1] - d1[1] * d2[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


@dataclass(frozen=True)
class FaceTracing:
    """Faces of a connected plane graph.

    ``faces[f]`` is the boundary walk of face ``f`` as a vertex list;
    ``left[(u, v)]`` is the face on the left of the directed edge ``u -> v``;
    ``area2[f]`` is twice the signed area; ``outer`` is the unbounded face.
    """

    faces: tuple[tuple[int, ...], ...]
    left: Mapping[tuple[int, int], int]
    area2: tuple[int, ...]
    outer: int


def trace_faces(coords: Mapping[int, tuple[int, int]], edges: Iterable[Simplex]) -> FaceTracing:
    """Enumerate faces by following, at each vertex, the next edge clockwise."""
    edges = sorted(set(edges))
    if not edges:
        raise EmbeddingError("face tracing needs at least one edge")
    nbrs: dict[int, list[int]] = {}
    for e in edges:
        u, v = e.verts
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    _check_connected(nbrs)
    pos: dict[int, dict[int, int]] = {}
    for v, ns in nbrs.items():
        p = coords[v]
        ns.sort(key=cmp_to_key(lambda a, b: _angle_cmp(
            (coords[a][0] - p[0], coords[a][1] - p[1]), (coords[b][0] - p[0], coords[b][1] - p[1]))))
        pos[v] = {w: i for i, w in enumerate(ns)}
    left: dict[tuple[int, int], int] = {}
    faces, areas = [], []
    for e in edges:
        for start in (e.verts, e.verts[::-1]):
            if start in left:
                continue
            f = len(faces)
            walk, area = [], 0
            u, v = start
            while (u, v) not in left:
                left[(u, v)] = f
                walk.append(u)
                area += coords[u][0] * coords[v][1] - coords[v][0] * coords[u][1]
                ns = nbrs[v]
                w = ns[(pos[v][u] - 1) % len(ns)]
                u, v = v, w
            faces.append(tuple(walk))
            areas.append(area)
    outer = [f for f, a in enumerate(areas) if a <= 0]
    if len(outer) != 1:
        raise EmbeddingError(f"expected one unbounded face, found {len(outer)}")
    return FaceTracing(tuple(faces), left, tuple(areas), outer[0])


def _check_connected(nbrs: Mapping[int, list[int]]) -> None:
    start = next(iter(nbrs))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(nbrs):
        raise EmbeddingError("face tracing needs a connected 1-skeleton")
