import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zzgraph import BarcodeForest


def ancestors(forest, x):
    out = [x]
    while forest.parent(out[-1]) is not None:
        out.append(forest.parent(out[-1]))
    return out


def naive_nca(forest, x, y):
    up = set(ancestors(forest, x))
    for a in ancestors(forest, y):
        if a in up:
            return a
    return None


def test_new_root_makes_one_tree():
    f = BarcodeForest()
    leaf = f.new_root(1)
    root, level = f.root_of(leaf)
    assert f.n_trees == 1 and level == 1
    assert f.root_of(root) == (root, 1)
    assert f.kind(root) == "root" and f.kind(leaf) == "leaf"
    assert f.level(leaf) is None


def test_two_roots_are_distinct_trees():
    f = BarcodeForest()
    a, b = f.new_root(1), f.new_root(2)
    assert f.root_of(a)[0] != f.root_of(b)[0]
    assert f.n_trees == 2
    with pytest.raises(ValueError, match="different trees"):
        f.nca(a, b)


def test_split_gives_siblings_under_splitting_node():
    f = BarcodeForest()
    leaf = f.new_root(1)
    a, b = f.split(leaf, 3)
    s = f.parent(a)
    assert f.parent(b) == s and f.kind(s) == "splitting" and f.level(s) == 3
    assert f.nca(a, b) == s
    root = f.root_of(a)[0]
    assert f.nca(root, a) == root
    with pytest.raises((KeyError, ValueError)):
        f.split(leaf, 4)
    f.check()


def test_cross_tree_merge_kills_younger_root():
    f = BarcodeForest()
    a, b = f.new_root(1), f.new_root(2)
    r = f.merge(a, b)
    assert (r.birth, r.cross_tree) == (2, True)
    assert f.n_trees == 1
    assert f.root_of(r.leaf)[1] == 1
    f.check()


def test_same_tree_merge_closes_split():
    f = BarcodeForest()
    a, b = f.split(f.new_root(1), 4)
    r = f.merge(a, b)
    assert (r.birth, r.cross_tree) == (5, False)
    assert f.parent(r.leaf) == f.root_of(r.leaf)[0]
    assert [k for _, _, _, k in f.dump()].count("splitting") == 0
    f.check()


def test_departure_under_lone_root():
    f = BarcodeForest()
    leaf = f.new_root(3)
    assert f.departure_scan(leaf) == (3, "root")
    assert f.n_trees == 0 and f.leaves() == []


def test_departure_under_split_keeps_sibling():
    f = BarcodeForest()
    a, b = f.split(f.new_root(1), 6)
    assert f.departure_scan(a) == (6, "splitting")
    assert f.parent(b) == f.root_of(b)[0]
    assert f.open_intervals(9) == [(1, 9)]
    f.check()


def test_merge_validates_arguments():
    f = BarcodeForest()
    a = f.new_root(1)
    with pytest.raises(ValueError):
        f.merge(a, a)
    with pytest.raises(ValueError):
        f.merge(a, f.root_of(a)[0])


def test_figure3_event_replay():
    """Entrances, merges, splits and a departure in the order of the figure-3 arrows."""
    f = BarcodeForest()
    out = []
    v0 = f.new_root(1)
    v1 = f.new_root(2)
    r = f.merge(v0, v1)
    out.append((r.birth, 2))
    v2 = f.new_root(4)
    r = f.merge(r.leaf, v2)
    out.append((r.birth, 4))
    side0, side12 = f.split(r.leaf, 5)
    v3 = f.new_root(7)
    side1, side2 = f.split(side12, 7)
    r = f.merge(side0, side1)
    assert not r.cross_tree
    out.append((r.birth, 8))
    level, kind = f.departure_scan(side2)
    assert (level, kind) == (7, "splitting")
    out.append((level + 1, 9))
    out += f.open_intervals(10)
    assert sorted(out) == sorted([(2, 2), (4, 4), (6, 8), (8, 9), (7, 10), (1, 10)])
    assert f.scan_visits <= f.nodes_created
    assert len(f.leaves()) == 2 and v3 in f.leaves()
    f.check()


def run_random_script(seed, steps):
    rng = random.Random(seed)
    f = BarcodeForest(capacity=4)
    leaves = []
    for level in range(1, steps + 1):
        r = rng.random()
        if not leaves or r < 0.3:
            leaves.append(f.new_root(level))
        elif r < 0.55:
            x = leaves.pop(rng.randrange(len(leaves)))
            leaves += f.split(x, level)
        elif r < 0.8 and len(leaves) >= 2:
            x, y = rng.sample(leaves, 2)
            rx, ry = ancestors(f, x)[-1], ancestors(f, y)[-1]
            if rx != ry:
                want = max(f.level(rx), f.level(ry))
            else:
                want = f.level(naive_nca(f, x, y)) + 1
            res = f.merge(x, y)
            assert res.birth == want
            assert res.cross_tree == (rx != ry)
            leaves = [z for z in leaves if z not in (x, y)] + [res.leaf]
        else:
            x = leaves.pop(rng.randrange(len(leaves)))
            p = f.parent(x)
            want = (f.level(p), f.kind(p))
            assert f.departure_scan(x) == want
        f.check()
        assert sorted(f.leaves()) == sorted(leaves)
        for x in rng.sample(leaves, min(4, len(leaves))):
            anc = ancestors(f, x)
            assert f.root_of(x) == (anc[-1], f.level(anc[-1]))
        if len(leaves) >= 2:
            x, y = rng.sample(leaves, 2)
            want = naive_nca(f, x, y)
            if want is None:
                with pytest.raises(ValueError):
                    f.nca(x, y)
            else:
                assert f.nca(x, y) == want
    assert f.scan_visits <= f.nodes_created
    return f


@given(seed=st.integers(0, 2**32), steps=st.integers(1, 200))
def test_random_scripts_keep_invariants(seed, steps):
    run_random_script(seed, steps)


def test_long_random_script_grows_capacity():
    f = run_random_script(5, 3000)
    assert f.nodes_created > 1000
