"""Seeded random graph filtrations.

Every step picks a direction, then a simplex uniformly among the legal moves
of that direction: absent vertices or absent edges between present vertices
going forward, and isolated vertices or present edges going backward. If the
chosen direction has no legal move, the other one is used.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .filtration import Arrow, Simplex, ZigzagFiltration

MODELS = ("dynamic-er", "insert-heavy", "churn")

_FORWARD_PROB = {"dynamic-er": 0.5, "insert-heavy": 0.75, "churn": 0.5}
_CHURN_UNDO_PROB = 0.5


@dataclass(frozen=True)
class GeneratorConfig:
    n_vertices: int
    m: int
    seed: int
    model: str = "dynamic-er"

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("n_vertices must be at least 1")
        if self.m < 0:
            raise ValueError("m must be non-negative")
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; expected one of {MODELS}")


class _IndexedSet:
    """Set with O(1) insert, delete and uniform sampling."""

    def __init__(self):
        self.items: list = []
        self.where: dict = {}

    def add(self, x):
        self.where[x] = len(self.items)
        self.items.append(x)

    def discard(self, x):
        i = self.where.pop(x, None)
        if i is None:
            return
        last = self.items.pop()
        if i < len(self.items):
            self.items[i] = last
            self.where[last] = i

    def __contains__(self, x):
        return x in self.where

    def __len__(self):
        return len(self.items)

    def sample(self, rng: random.Random):
        return self.items[rng.randrange(len(self.items))]


def generate_random(n_vertices: int, m: int, seed: int, model: str = "dynamic-er") -> ZigzagFiltration:
    cfg = GeneratorConfig(n_vertices, m, seed, model)
    rng = random.Random(cfg.seed)
    n = cfg.n_vertices
    p_fwd = _FORWARD_PROB[cfg.model]

    present = _IndexedSet()
    absent = _IndexedSet()
    for v in range(n):
        absent.add(v)
    edges = _IndexedSet()
    degree = [0] * n
    isolated = _IndexedSet()
    history: list[tuple] = []  # most recent additions, for the churn model

    arrows: list[Arrow] = []

    def n_addable_edges():
        k = len(present)
        return k * (k - 1) // 2 - len(edges)

    def pick_absent_edge():
        k = len(present)
        if n_addable_edges() * 2 >= k * (k - 1) // 2:
            while True:
                u, v = present.sample(rng), present.sample(rng)
                if u != v:
                    e = (min(u, v), max(u, v))
                    if e not in edges:
                        return e
        pool = sorted(present.items)
        cand = [(a, b) for i, a in enumerate(pool) for b in pool[i + 1:] if (a, b) not in edges]
        return cand[rng.randrange(len(cand))]

    def do_add(item):
        if isinstance(item, tuple):
            u, v = item
            edges.add(item)
            for x in item:
                if degree[x] == 0:
                    isolated.discard(x)
                degree[x] += 1
            arrows.append(Arrow(True, Simplex((u, v))))
        else:
            absent.discard(item)
            present.add(item)
            isolated.add(item)
            arrows.append(Arrow(True, Simplex((item,))))
        history.append(item)

    def do_remove(item):
        if isinstance(item, tuple):
            edges.discard(item)
            for x in item:
                degree[x] -= 1
                if degree[x] == 0:
                    isolated.add(x)
            arrows.append(Arrow(False, Simplex(item)))
        else:
            present.discard(item)
            isolated.discard(item)
            absent.add(item)
            arrows.append(Arrow(False, Simplex((item,))))

    def removable(item):
        if isinstance(item, tuple):
            return item in edges
        return item in isolated

    for _ in range(cfg.m):
        n_fwd = len(absent) + n_addable_edges()
        n_bwd = len(isolated) + len(edges)
        forward = rng.random() < p_fwd
        if forward and n_fwd == 0:
            forward = False
        elif not forward and n_bwd == 0:
            forward = True

        if forward:
            if rng.randrange(n_fwd) < len(absent):
                do_add(absent.sample(rng))
            else:
                do_add(pick_absent_edge())
            continue

        if cfg.model == "churn" and rng.random() < _CHURN_UNDO_PROB:
            while history and not removable(history[-1]):
                history.pop()
            if history:
                do_remove(history.pop())
                continue
        if rng.randrange(n_bwd) < len(isolated):
            do_remove(isolated.sample(rng))
        else:
            do_remove(edges.sample(rng))

    return ZigzagFiltration(tuple(arrows), n_vertices=n)
