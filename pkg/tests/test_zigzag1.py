import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zzgraph import (Barcode, FiltrationError, OneState, compute_barcode1, generate_random,
                     oracle_barcode, parse_filtration)
from zzgraph.filtration import add, remove
from zzgraph.zigzag1 import OrderedIndexSet

from conftest import FIG5_BARCODE
from test_zigzag0 import components_per_index

MODELS = ["dynamic-er", "insert-heavy", "churn"]


def classes(filt):
    z = OneState(max(filt.vertex_ids(), default=0) + 1,
                 [s.verts for s in filt.initial if s.dim == 1])
    out = []
    for i, a in enumerate(filt.arrows, start=1):
        out.append(z.classify_arrow(a))
        z.process_arrow(a, i)
    return out


def test_ordered_index_set():
    U = OrderedIndexSet(lo=-3, capacity=2)
    for j in (5, -2, 40, 7):
        U.add(j)
    assert list(U) == [-2, 5, 7, 40] and len(U) == 4
    assert U.successor(-3) == -2 and U.successor(5) == 7 and U.successor(40) is None
    U.remove(7)
    assert 7 not in U and U.successor(5) == 40
    with pytest.raises(KeyError):
        U.remove(7)


def test_classification_on_small_graphs():
    text = "+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n+e 0 2\n-e 0 1\n-e 1 2\n"
    assert classes(parse_filtration(text)) == ["neutral"] * 5 + ["positive", "negative", "neutral"]


def test_classify_leaves_state_unchanged():
    z = OneState(3)
    for i, (u, v) in enumerate([(0, 1), (1, 2), (0, 2)], start=1):
        z.process_arrow(add(u, v), i)
    before = z.msf.msf_edges()
    assert z.classify_arrow(remove(0, 1)) == "negative"
    assert z.msf.msf_edges() == before


def test_figure5_pairings(fig5):
    z = OneState(7, [s.verts for s in fig5.initial if s.dim == 1])
    closed = {}
    for i, a in enumerate(fig5.arrows, start=1):
        iv = z.process_arrow(a, i)
        if iv is not None:
            closed[i] = tuple(iv)
    assert closed == {7: (4, 6), 9: (2, 8)}
    assert sorted(tuple(iv) for iv in z.finalize(9)) == [(6, 9), (8, 9)]
    assert classes(fig5) == ["neutral", "positive", "neutral", "positive", "neutral",
                             "positive", "negative", "positive", "negative"]


def test_figure5_barcode(fig5):
    assert compute_barcode1(fig5) == Barcode.of(1, FIG5_BARCODE)
    assert oracle_barcode(fig5, 1) == Barcode.of(1, FIG5_BARCODE)


def test_tree_only_filtration_is_empty():
    text = "+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n-e 0 1\n+e 0 2\n"
    assert compute_barcode1(parse_filtration(text)) == Barcode(1)


def test_triangle_kept_gives_point_interval():
    text = "+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n+e 0 2\n"
    assert compute_barcode1(parse_filtration(text)) == Barcode.of(1, [(6, 6)])


def test_triangles_rejected():
    text = "dim 2\n+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n+e 0 2\n+t 0 1 2\n"
    with pytest.raises(FiltrationError, match="triangle"):
        compute_barcode1(parse_filtration(text))


def test_initial_cycle_born_at_zero():
    filt = parse_filtration("init v 0\ninit v 1\ninit v 2\ninit e 0 1\ninit e 1 2\n"
                            "init e 0 2\n- e 1 2\n")
    assert compute_barcode1(filt) == Barcode.of(1, [(0, 0)])
    assert oracle_barcode(filt, 1) == Barcode.of(1, [(0, 0)])


@given(n=st.integers(1, 12), m=st.integers(0, 40), seed=st.integers(0, 2**32),
       model=st.sampled_from(MODELS))
def test_matches_oracle_and_python_path(n, m, seed, model):
    filt = generate_random(n, m, seed, model)
    want = oracle_barcode(filt, 1)
    assert compute_barcode1(filt) == want
    z = OneState(n)
    got = []
    for i, a in enumerate(filt.arrows, start=1):
        z.classify_arrow(a)
        iv = z.process_arrow(a, i)
        if iv is not None:
            got.append(iv)
    got += z.finalize(m)
    assert Barcode(1, tuple(got)) == want


@given(n=st.integers(1, 30), m=st.integers(0, 300), seed=st.integers(0, 2**32),
       model=st.sampled_from(MODELS))
def test_betti_profile_and_endpoint_classes(n, m, seed, model):
    filt = generate_random(n, m, seed, model)
    bc = compute_barcode1(filt)
    c = components_per_index(filt)
    snaps = list(filt.snapshots())
    want = [sum(s.dim == 1 for s in g) - sum(s.dim == 0 for s in g) + c[i]
            for i, g in enumerate(snaps)]
    assert bc.betti_profile(m) == want
    kinds = classes(filt)
    for iv in bc:
        assert kinds[iv.birth - 1] == "positive"
        assert iv.death == m or kinds[iv.death] == "negative"


def _cycle_through(edges, e1, e2):
    """Brute force: some Z2 1-cycle of ``edges`` uses both ``e1`` and ``e2``."""
    idx = {e: i for i, e in enumerate(edges)}
    need = (1 << idx[e1]) | (1 << idx[e2])
    for mask in range(1 << len(edges)):
        if mask & need != need:
            continue
        deg = {}
        for i, (a, b) in enumerate(edges):
            if mask >> i & 1:
                deg[a] = deg.get(a, 0) ^ 1
                deg[b] = deg.get(b, 0) ^ 1
        if not any(deg.values()):
            return True
    return False


def test_pairing_witness_cycles():
    checked = 0
    for seed in range(300):
        rng = random.Random(seed)
        filt = generate_random(rng.randint(3, 6), rng.randint(5, 30), seed,
                               rng.choice(MODELS))
        snaps = list(filt.snapshots())
        z = OneState(6)
        born = {}
        for i, a in enumerate(filt.arrows, start=1):
            iv = z.process_arrow(a, i)
            s = a.simplex
            if s is not None and s.dim == 1 and a.forward:
                born[i] = s.verts
            if iv is None:
                continue
            for k in range(iv.birth, i):
                edges = [t.verts for t in snaps[k] if t.dim == 1]
                if len(edges) > 10:
                    continue
                assert _cycle_through(edges, born[iv.birth], s.verts), (seed, i, k)
                checked += 1
    assert checked > 200
