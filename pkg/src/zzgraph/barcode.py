"""Barcodes: multisets of closed integer intervals ``[b, d]``."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True, order=True)
class Interval:
    birth: int
    death: int

    def __post_init__(self):
        if self.birth > self.death:
            raise ValueError(f"birth {self.birth} after death {self.death}")

    def __contains__(self, i: int) -> bool:
        return self.birth <= i <= self.death

    def __iter__(self):
        yield self.birth
        yield self.death

    def __repr__(self) -> str:
        return f"[{self.birth},{self.death}]"


@dataclass(frozen=True)
class Barcode:
    """Intervals of one homology dimension, kept sorted so ``==`` is multiset equality."""

    dim: int
    intervals: tuple[Interval, ...] = ()

    def __post_init__(self):
        ivs = sorted(Interval(*iv) if not isinstance(iv, Interval) else iv
                     for iv in self.intervals)
        object.__setattr__(self, "intervals", tuple(ivs))

    @classmethod
    def of(cls, dim: int, pairs: Iterable) -> "Barcode":
        return cls(dim, tuple(Interval(int(b), int(d)) for b, d in pairs))

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def pairs(self) -> list[tuple[int, int]]:
        return [(iv.birth, iv.death) for iv in self.intervals]

    def counter(self) -> Counter:
        return Counter(self.intervals)

    def betti_profile(self, m: int) -> list[int]:
        """Number of intervals containing each index ``0..m``."""
        diff = [0] * (m + 2)
        for iv in self.intervals:
            diff[iv.birth] += 1
            diff[iv.death + 1] -= 1
        out, run = [], 0
        for i in range(m + 1):
            run += diff[i]
            out.append(run)
        return out

    def difference(self, other: "Barcode") -> tuple[Counter, Counter]:
        """``(only in self, only in other)`` as counters."""
        a, b = self.counter(), other.counter()
        return a - b, b - a

    def __repr__(self) -> str:
        return f"Barcode(dim={self.dim}, {list(self.intervals)})"


def serialize_barcode(barcode: Barcode, fmt: str = "text") -> bytes:
    if fmt == "text":
        return "".join(f"{barcode.dim} {iv.birth} {iv.death}\n"
                       for iv in barcode.intervals).encode()
    if fmt == "json":
        doc = {"dim": barcode.dim, "intervals": [[iv.birth, iv.death] for iv in barcode.intervals]}
        return (json.dumps(doc) + "\n").encode()
    raise ValueError(f"unknown barcode format {fmt!r}")


def parse_barcode(data: str | bytes, fmt: str = "text", dim: int | None = None) -> Barcode:
    if isinstance(data, bytes):
        data = data.decode()
    if fmt == "json":
        doc = json.loads(data)
        return Barcode.of(doc["dim"], doc["intervals"])
    if fmt != "text":
        raise ValueError(f"unknown barcode format {fmt!r}")
    pairs, dims = [], set()
    for line in data.splitlines():
        if not line.strip():
            continue
        p, b, d = (int(t) for t in line.split())
        dims.add(p)
        pairs.append((b, d))
    if len(dims) > 1:
        raise ValueError(f"mixed dimensions {sorted(dims)}")
    if dims:
        dim = dims.pop()
    return Barcode.of(0 if dim is None else dim, pairs)
