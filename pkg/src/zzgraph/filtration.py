"""Zigzag filtrations of graphs and embedded 2-complexes.

A filtration is an ordered list of arrows, each inserting (forward) or
deleting (backward) a single simplex. Arrow ``k`` (1-based) maps
``K_{k-1} <-> K_k``, so interval endpoints live in ``[0, m]``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

_KIND_BY_SIZE = {1: "v", 2: "e", 3: "t", 4: "T"}
_SIZE_BY_KIND = {"v": 1, "e": 2, "t": 3}


class FiltrationError(ValueError):
    """Raised for malformed filtration text or an arrow that breaks closure."""

    def __init__(self, message: str, *, line: int | None = None, arrow: int | None = None,
                 reason: str | None = None):
        super().__init__(message)
        self.line = line
        self.arrow = arrow
        self.reason = reason


@dataclass(frozen=True, order=True)
class Simplex:
    """A simplex named by its sorted vertex ids."""

    verts: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted(int(v) for v in self.verts))
        if not 1 <= len(vs) <= 4:
            raise ValueError(f"simplex needs 1..4 vertices, got {len(vs)}")
        if any(v < 0 for v in vs):
            raise ValueError("vertex ids must be non-negative")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in simplex {vs}")
        object.__setattr__(self, "verts", vs)

    @classmethod
    def of(cls, *verts: int) -> "Simplex":
        return cls(tuple(verts))

    @property
    def dim(self) -> int:
        return len(self.verts) - 1

    @property
    def kind(self) -> str:
        return ("vertex", "edge", "triangle", "tetrahedron")[self.dim]

    def faces(self) -> tuple["Simplex", ...]:
        """Codimension-one faces (empty for a vertex)."""
        if self.dim == 0:
            return ()
        vs = self.verts
        return tuple(Simplex(vs[:i] + vs[i + 1:]) for i in range(len(vs)))

    def __str__(self) -> str:
        return _KIND_BY_SIZE[len(self.verts)] + " " + " ".join(map(str, self.verts))


@dataclass(frozen=True)
class Arrow:
    """One step of a filtration. ``simplex is None`` marks an explicit no-op."""

    forward: bool
    simplex: Simplex | None

    @property
    def is_noop(self) -> bool:
        return self.simplex is None

    def __str__(self) -> str:
        if self.simplex is None:
            return "nop"
        return ("+ " if self.forward else "- ") + str(self.simplex)


NOOP = Arrow(True, None)


def add(*verts: int) -> Arrow:
    return Arrow(True, Simplex(tuple(verts)))


def remove(*verts: int) -> Arrow:
    return Arrow(False, Simplex(tuple(verts)))


@dataclass(frozen=True)
class ZigzagFiltration:
    """Arrows ``1..m`` over an optional non-empty starting complex ``K_0``.

    ``initial`` is empty for ordinary filtrations. ``coords`` holds integer
    planar coordinates when the complex is embedded.
    """

    arrows: tuple[Arrow, ...]
    initial: tuple[Simplex, ...] = ()
    dim: int = 1
    n_vertices: int | None = None
    coords: Mapping[int, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "initial", tuple(sorted(set(self.initial), key=_simplex_order)))
        object.__setattr__(self, "coords", dict(self.coords))
        top = max((a.simplex.dim for a in self.arrows if a.simplex is not None), default=0)
        top = max([top] + [s.dim for s in self.initial])
        if top > self.dim:
            object.__setattr__(self, "dim", top)

    @property
    def m(self) -> int:
        return len(self.arrows)

    def __len__(self) -> int:
        return len(self.arrows)

    def vertex_ids(self) -> list[int]:
        ids: set[int] = set()
        for s in self.initial:
            ids.update(s.verts)
        for a in self.arrows:
            if a.simplex is not None:
                ids.update(a.simplex.verts)
        return sorted(ids)

    def simplices(self) -> list[Simplex]:
        """The ground complex: every simplex that ever appears."""
        seen = set(self.initial)
        seen.update(a.simplex for a in self.arrows if a.simplex is not None)
        return sorted(seen, key=_simplex_order)

    def snapshots(self) -> Iterator[frozenset[Simplex]]:
        """Yield ``K_0, K_1, ..., K_m`` (assumes a valid filtration)."""
        cur = set(self.initial)
        yield frozenset(cur)
        for a in self.arrows:
            if a.simplex is not None:
                if a.forward:
                    cur.add(a.simplex)
                else:
                    cur.discard(a.simplex)
            yield frozenset(cur)

    def prefix(self, k: int) -> "ZigzagFiltration":
        return ZigzagFiltration(self.arrows[:k], self.initial, self.dim, self.n_vertices,
                                self.coords)

    def skeleton(self, p: int) -> "ZigzagFiltration":
        """Replace arrows of simplices above dimension ``p`` by no-ops."""
        arrows = tuple(a if a.simplex is None or a.simplex.dim <= p else NOOP
                       for a in self.arrows)
        init = tuple(s for s in self.initial if s.dim <= p)
        return ZigzagFiltration(arrows, init, min(self.dim, max(p, 1)), self.n_vertices,
                                self.coords)


def _simplex_order(s: Simplex) -> tuple:
    return (s.dim, s.verts)


def validate(filt: ZigzagFiltration) -> None:
    """Replay the arrows and raise ``FiltrationError`` at the first violation."""
    present: set[Simplex] = set()
    cofaces: Counter[Simplex] = Counter()

    for s in sorted(filt.initial, key=_simplex_order):
        missing = [f for f in s.faces() if f not in present]
        if missing:
            raise FiltrationError(f"initial complex: dangling face {missing[0]} of {s}",
                                  arrow=0, reason="dangling face")
        present.add(s)
        for f in s.faces():
            cofaces[f] += 1

    for k, a in enumerate(filt.arrows, start=1):
        s = a.simplex
        if s is None:
            continue
        if a.forward:
            if s in present:
                raise FiltrationError(f"duplicate add at arrow {k}: {s}", arrow=k,
                                      reason="duplicate add")
            if any(f not in present for f in s.faces()):
                raise FiltrationError(f"dangling face at arrow {k}: {s}", arrow=k,
                                      reason="dangling face")
            present.add(s)
            for f in s.faces():
                cofaces[f] += 1
        else:
            if s not in present:
                raise FiltrationError(f"delete-missing at arrow {k}: {s}", arrow=k,
                                      reason="delete-missing")
            if cofaces[s]:
                raise FiltrationError(f"delete-with-coface at arrow {k}: {s}", arrow=k,
                                      reason="delete-with-coface")
            present.remove(s)
            for f in s.faces():
                cofaces[f] -= 1

    if filt.n_vertices is not None:
        ids = filt.vertex_ids()
        if ids and ids[-1] >= filt.n_vertices:
            raise FiltrationError(f"vertex id {ids[-1]} exceeds declared count {filt.n_vertices}",
                                  reason="vertex out of range")


# ---------------------------------------------------------------- text format

_ARROW_RE = re.compile(r"^([+\-])\s*([vet])\b\s*(.*)$")


def parse_filtration(text: str | bytes, *, check: bool = True) -> ZigzagFiltration:
    """Parse the v1 text format.

    Recognised lines: ``# ...`` comments, ``dim D``, ``vertices N``,
    ``coord ID X Y``, ``init v|e|t IDS`` for a non-empty ``K_0``, arrows
    ``+ v ID`` / ``- e ID ID`` / ``+ t ID ID ID`` (the space after the sign is
    optional), and ``nop``.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    arrows: list[Arrow] = []
    initial: list[Simplex] = []
    coords: dict[int, tuple[int, int]] = {}
    dim = 1
    n_vertices = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip().replace("−", "-")
        if not line or line.startswith("#"):
            continue
        try:
            head, *rest = line.split()
            if head == "dim":
                (d,) = rest
                dim = int(d)
                if dim not in (1, 2):
                    raise ValueError(f"unsupported dim {dim}")
            elif head == "vertices":
                (nv,) = rest
                n_vertices = int(nv)
            elif head == "coord":
                vid, x, y = (int(t) for t in rest)
                coords[vid] = (x, y)
            elif head == "init":
                kind, *ids = rest
                initial.append(_simplex_from(kind, ids))
            elif head == "nop":
                if rest:
                    raise ValueError("nop takes no arguments")
                arrows.append(NOOP)
            else:
                mt = _ARROW_RE.match(line)
                if mt is None:
                    raise ValueError(f"unrecognised line {line!r}")
                sign, kind, tail = mt.groups()
                arrows.append(Arrow(sign == "+", _simplex_from(kind, tail.split())))
        except ValueError as exc:
            raise FiltrationError(f"line {lineno}: {exc}", line=lineno,
                                  reason="syntax") from None

    filt = ZigzagFiltration(tuple(arrows), tuple(initial), dim, n_vertices, coords)
    if check:
        validate(filt)
    return filt


def _simplex_from(kind: str, ids: Sequence[str]) -> Simplex:
    if kind not in _SIZE_BY_KIND:
        raise ValueError(f"unknown simplex kind {kind!r}")
    if len(ids) != _SIZE_BY_KIND[kind]:
        raise ValueError(f"{kind} expects {_SIZE_BY_KIND[kind]} ids, got {len(ids)}")
    return Simplex(tuple(int(t) for t in ids))


def format_filtration(filt: ZigzagFiltration) -> str:
    lines = []
    if filt.dim != 1:
        lines.append(f"dim {filt.dim}")
    if filt.n_vertices is not None:
        lines.append(f"vertices {filt.n_vertices}")
    for vid in sorted(filt.coords):
        x, y = filt.coords[vid]
        lines.append(f"coord {vid} {x} {y}")
    lines.extend(f"init {s}" for s in filt.initial)
    lines.extend(str(a) for a in filt.arrows)
    return "".join(line + "\n" for line in lines)


def read_filtration(path, *, check: bool = True) -> ZigzagFiltration:
    with open(path, "rb") as fh:
        return parse_filtration(fh.read(), check=check)


def write_filtration(filt: ZigzagFiltration, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_filtration(filt))


def from_arrows(arrows: Iterable[Arrow], **kw) -> ZigzagFiltration:
    filt = ZigzagFiltration(tuple(arrows), **kw)
    validate(filt)
    return filt
