"""Brute-force Z2 ground truth for small zigzag filtrations.

Each snapshot ``K_i`` gets an explicit homology basis. Adjacent snapshots are
linked by the maps induced by inclusion. ``r(i, j)``, the number of barcode
intervals containing ``[i, j]``, is the rank of the composite linear relation
``V_i -- V_j``. Interval multiplicities then follow by inclusion-exclusion.
Vectors are Python ints used as bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .barcode import Barcode
from .filtration import Simplex, ZigzagFiltration


class OracleError(RuntimeError):
    """Instance too large for the oracle, or an internal self-check failed."""


MAX_ARROWS = 64
MAX_SNAPSHOT = 64


# ------------------------------------------------------------- bit elimination

class Echelon:
    """Row-echelon basis keyed by leading bit; each row carries a tag bitset."""

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}

    def reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        rows = self.rows
        while v:
            row = rows.get(v.bit_length() - 1)
            if row is None:
                break
            v ^= row[0]
            tag ^= row[1]
        return v, tag

    def add(self, v: int, tag: int = 0) -> tuple[int, int]:
        """Insert ``v``; return its residue and tag (residue 0 means dependent)."""
        v, tag = self.reduce(v, tag)
        if v:
            self.rows[v.bit_length() - 1] = (v, tag)
        return v, tag

    def __len__(self) -> int:
        return len(self.rows)


def rank(vectors: Sequence[int]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def _bits(v: int):
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


def apply(images: Sequence[int], v: int) -> int:
    out = 0
    for t in _bits(v):
        out ^= images[t]
    return out


# ------------------------------------------------------------------- homology

@dataclass
class HomologySpace:
    """``H_p`` of one snapshot: generators as chains plus a coordinate map."""

    p: int
    generators: list[int]
    _reducer: Echelon

    @property
    def dim(self) -> int:
        return len(self.generators)

    def coords(self, chain: int) -> int:
        residue, tag = self._reducer.reduce(chain)
        if residue:
            raise OracleError("chain is not a cycle of this snapshot")
        return tag


class SimplexIndex:
    """Global bit positions for the simplices of each dimension."""

    def __init__(self, simplices):
        self.pos: dict[Simplex, int] = {}
        counts: dict[int, int] = {}
        for s in sorted(simplices, key=lambda s: (s.dim, s.verts)):
            self.pos[s] = counts.get(s.dim, 0)
            counts[s.dim] = self.pos[s] + 1

    def boundary(self, s: Simplex) -> int:
        out = 0
        for f in s.faces():
            out |= 1 << self.pos[f]
        return out

    def chain(self, simplices) -> int:
        out = 0
        for s in simplices:
            out ^= 1 << self.pos[s]
        return out


def homology_space(snapshot, p: int, index: SimplexIndex | None = None) -> HomologySpace:
    """Basis of ``ker d_p / im d_{p+1}`` over Z2 for a snapshot (a set of simplices)."""
    if index is None:
        index = SimplexIndex(snapshot)
    cells = [s for s in snapshot if s.dim == p]
    cofaces = [s for s in snapshot if s.dim == p + 1]

    if p == 0:
        cycles = [1 << index.pos[s] for s in cells]
    else:
        kernel = Echelon()
        cycles = []
        for s in cells:
            residue, tag = kernel.add(index.boundary(s), 1 << index.pos[s])
            if not residue:
                cycles.append(tag)

    reducer = Echelon()
    for s in cofaces:
        reducer.add(index.boundary(s))
    generators = []
    for z in cycles:
        t = len(generators)
        residue, tag = reducer.reduce(z, 1 << t)
        if residue:
            reducer.rows[residue.bit_length() - 1] = (residue, tag)
            generators.append(z)
    return HomologySpace(p, generators, reducer)


def betti(snapshot, p: int) -> int:
    return homology_space(snapshot, p).dim


# ------------------------------------------------------------------ relations

def induced_map(src: HomologySpace, dst: HomologySpace) -> list[int]:
    """Matrix of the inclusion-induced map, one image bitset per source generator."""
    return [dst.coords(g) for g in src.generators]


@dataclass
class LinearRelation:
    """A subspace of ``V (+) W`` spanned by pairs ``(a, c)``."""

    dim_v: int
    dim_w: int
    pairs: list[tuple[int, int]]

    @classmethod
    def identity(cls, d: int) -> "LinearRelation":
        return cls(d, d, [(1 << t, 1 << t) for t in range(d)])

    def _canonical(self) -> list[tuple[int, int]]:
        ech = Echelon()
        shift = self.dim_w
        for a, c in self.pairs:
            ech.add((a << shift) | c)
        mask = (1 << shift) - 1
        return [(v >> shift, v & mask) for v, _ in ech.rows.values()]

    def then_forward(self, images: Sequence[int], dim_next: int) -> "LinearRelation":
        """Compose with a map ``W -> W'`` given by generator images."""
        out = LinearRelation(self.dim_v, dim_next, [(a, apply(images, c)) for a, c in self.pairs])
        out.pairs = out._canonical()
        return out

    def then_backward(self, images: Sequence[int], dim_next: int) -> "LinearRelation":
        """Compose with the converse of a map ``W' -> W``."""
        dv, dw = self.dim_v, dim_next
        mid = dv + dw
        ech = Echelon()
        for a, c in self.pairs:
            ech.add((c << mid) | (a << dw))
        for t, img in enumerate(images):
            ech.add((img << mid) | (1 << t))
        low = (1 << mid) - 1
        wmask = (1 << dw) - 1
        keep = [v for v, _ in ech.rows.values() if not v >> mid]
        return LinearRelation(dv, dw, [((v & low) >> dw, v & wmask) for v in keep])

    def converse(self) -> "LinearRelation":
        return LinearRelation(self.dim_w, self.dim_v, [(c, a) for a, c in self.pairs])

    def rank(self) -> int:
        """``dim proj_W(R) - dim(R & (0 (+) W))``."""
        pairs = self._canonical()
        proj = rank([c for _, c in pairs])
        right_only = sum(1 for a, _ in pairs if a == 0)
        return proj - right_only

    def contains(self, a: int, c: int) -> bool:
        ech = Echelon()
        for x, y in self.pairs:
            ech.add((x << self.dim_w) | y)
        residue, _ = ech.reduce((a << self.dim_w) | c)
        return residue == 0


def induced_relation(src_snapshot, dst_snapshot, p: int, forward: bool,
                     index: SimplexIndex | None = None) -> LinearRelation:
    """Relation ``H_p(K_i) -- H_p(K_{i+1})`` for one arrow.

    ``forward`` means ``K_i`` is a subcomplex of ``K_{i+1}``; otherwise the
    relation is the converse of the map ``H_p(K_{i+1}) -> H_p(K_i)``.
    """
    if index is None:
        index = SimplexIndex(set(src_snapshot) | set(dst_snapshot))
    hs = homology_space(src_snapshot, p, index)
    hd = homology_space(dst_snapshot, p, index)
    if forward:
        images = induced_map(hs, hd)
        return LinearRelation(hs.dim, hd.dim, [(1 << t, images[t]) for t in range(hs.dim)])
    images = induced_map(hd, hs)
    return LinearRelation(hs.dim, hd.dim, [(images[t], 1 << t) for t in range(hd.dim)])


# --------------------------------------------------------------------- module

@dataclass
class ZigzagModule:
    """``H_p`` of a filtration as dimensions plus one map per arrow."""

    dims: list[int]
    forward: list[bool]
    maps: list[list[int]]  # arrow k: images of generators of the map's domain

    @property
    def m(self) -> int:
        return len(self.forward)


def homology_module(filt: ZigzagFiltration, p: int, *, max_arrows: int = MAX_ARROWS,
                    max_snapshot: int = MAX_SNAPSHOT) -> ZigzagModule:
    if filt.m > max_arrows:
        raise OracleError(f"oracle guard: {filt.m} arrows > {max_arrows}")
    index = SimplexIndex(filt.simplices())
    snaps = list(filt.snapshots())
    big = max((len(s) for s in snaps), default=0)
    if big > max_snapshot:
        raise OracleError(f"oracle guard: snapshot with {big} simplices > {max_snapshot}")
    spaces = [homology_space(s, p, index) for s in snaps]
    forward, maps = [], []
    for k, a in enumerate(filt.arrows, start=1):
        src, dst = spaces[k - 1], spaces[k]
        fwd = a.forward or a.simplex is None
        forward.append(fwd)
        maps.append(induced_map(src, dst) if fwd else induced_map(dst, src))
    return ZigzagModule([s.dim for s in spaces], forward, maps)


def relation_ranks(module: ZigzagModule) -> list[list[int]]:
    """``r[i][j]`` for ``i <= j``: intervals of the module containing ``[i, j]``."""
    m = module.m
    r = [[0] * (m + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        rel = LinearRelation.identity(module.dims[i])
        r[i][i] = module.dims[i]
        for j in range(i, m):
            if r[i][j] == 0:
                break
            if module.forward[j]:
                rel = rel.then_forward(module.maps[j], module.dims[j + 1])
            else:
                rel = rel.then_backward(module.maps[j], module.dims[j + 1])
            r[i][j + 1] = rel.rank()
    return r


def relation_rank(module: ZigzagModule, i: int, j: int) -> int:
    rel = LinearRelation.identity(module.dims[i])
    for k in range(i, j):
        if module.forward[k]:
            rel = rel.then_forward(module.maps[k], module.dims[k + 1])
        else:
            rel = rel.then_backward(module.maps[k], module.dims[k + 1])
    return rel.rank()


def barcode_from_ranks(r: list[list[int]], p: int) -> Barcode:
    m = len(r) - 1

    def at(i, j):
        if i < 0 or j > m:
            return 0
        return r[i][j]

    pairs = []
    for b in range(m + 1):
        for d in range(b, m + 1):
            mult = at(b, d) - at(b - 1, d) - at(b, d + 1) + at(b - 1, d + 1)
            if mult < 0:
                raise OracleError(f"negative multiplicity at [{b},{d}]")
            pairs.extend([(b, d)] * mult)
    return Barcode.of(p, pairs)


def oracle_barcode(filt: ZigzagFiltration, p: int, **guards) -> Barcode:
    """Exact ``H_p`` barcode with a per-index Betti self-check."""
    module = homology_module(filt, p, **guards)
    bc = barcode_from_ranks(relation_ranks(module), p)
    if bc.betti_profile(module.m) != module.dims:
        raise OracleError("oracle self-check failed: interval counts differ from Betti numbers")
    return bc


def classify_indices(filt: ZigzagFiltration, p: int, **guards) -> tuple[list[int], list[int]]:
    """Positive and negative indices of the elementary module ``H_p(F)``."""
    module = homology_module(filt, p, **guards)
    pos, neg = [], []
    for i in range(module.m):
        src_dim = module.dims[i] if module.forward[i] else module.dims[i + 1]
        dst_dim = module.dims[i + 1] if module.forward[i] else module.dims[i]
        rk = rank(module.maps[i])
        injective = rk == src_dim
        surjective = rk == dst_dim
        if injective and surjective:
            continue
        if module.forward[i]:
            if injective:
                pos.append(i + 1)
            elif surjective:
                neg.append(i)
            else:
                raise OracleError(f"arrow {i + 1} is not elementary")
        else:
            if injective:
                neg.append(i)
            elif surjective:
                pos.append(i + 1)
            else:
                raise OracleError(f"arrow {i + 1} is not elementary")
    neg.extend([module.m] * module.dims[-1])
    return sorted(pos), sorted(neg)


def betti_profile(filt: ZigzagFiltration, p: int) -> list[int]:
    index = SimplexIndex(filt.simplices())
    return [homology_space(s, p, index).dim for s in filt.snapshots()]
