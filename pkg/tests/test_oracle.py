import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zzgraph import Barcode, OracleError, Simplex, generate_random, oracle_barcode, parse_filtration
from zzgraph.oracle import (LinearRelation, betti, betti_profile, classify_indices,
                            homology_module, induced_relation, rank, relation_rank,
                            relation_ranks)
from zzgraph.reference import bfs_components

from conftest import FIG3_BARCODE, FIG5_BARCODE

S = Simplex.of
TRI = {S(0), S(1), S(2), S(0, 1), S(1, 2), S(0, 2)}
MODELS = ["dynamic-er", "insert-heavy", "churn"]


def test_rank_of_bitsets():
    assert rank([0b011, 0b110, 0b101]) == 2
    assert rank([]) == 0


def test_triangle_homology():
    assert betti(TRI, 1) == 1 and betti(TRI, 0) == 1
    assert betti(TRI | {S(0, 1, 2)}, 1) == 0


@given(n=st.integers(1, 10), m=st.integers(0, 40), seed=st.integers(0, 2**32))
def test_snapshot_betti_numbers_match_counting(n, m, seed):
    filt = generate_random(n, m, seed)
    for snap in filt.snapshots():
        verts = sorted(s.verts[0] for s in snap if s.dim == 0)
        index = {v: i for i, v in enumerate(verts)}
        edges = [(index[a], index[b]) for a, b in (s.verts for s in snap if s.dim == 1)]
        c = len(set(bfs_components(len(verts), edges)))
        assert betti(snap, 0) == c
        assert betti(snap, 1) == len(edges) - len(verts) + c


def test_vertex_addition_relation_is_inclusion():
    rel = induced_relation({S(0)}, {S(0), S(1)}, 0, True)
    assert (rel.dim_v, rel.dim_w) == (1, 2)
    assert rel.contains(1, 0b01) or rel.contains(1, 0b10)
    assert rel.rank() == 1


def test_splitting_deletion_is_converse_of_merge():
    before = {S(0), S(1), S(0, 1)}
    after = {S(0), S(1)}
    rel = induced_relation(before, after, 0, False)
    merge = induced_relation(after, before, 0, True)
    assert (rel.dim_v, rel.dim_w) == (1, 2)
    for a, c in merge.pairs:
        assert rel.contains(c, a)
    assert rel.contains(1, 0b01) and rel.contains(1, 0b10)
    assert not rel.contains(0, 0b01)


@given(n=st.integers(1, 8), m=st.integers(1, 30), seed=st.integers(0, 2**32),
       p=st.integers(0, 1))
def test_relation_then_converse_contains_identity(n, m, seed, p):
    filt = generate_random(n, m, seed)
    snaps = list(filt.snapshots())
    for k, a in enumerate(filt.arrows, start=1):
        lo, hi = (snaps[k - 1], snaps[k]) if a.forward else (snaps[k], snaps[k - 1])
        rel = induced_relation(lo, hi, p, True)
        images = [rel.pairs[t][1] for t in range(rel.dim_v)]
        back = rel.then_backward(images, rel.dim_v)
        for t in range(rel.dim_v):
            assert back.contains(1 << t, 1 << t)


def test_identity_relation_rank_and_converse():
    rel = LinearRelation.identity(3)
    assert rel.rank() == 3
    assert rel.converse().pairs == rel.pairs


def test_rank_at_a_point_is_dimension(fig3):
    module = homology_module(fig3, 0)
    for i in range(fig3.m + 1):
        assert relation_rank(module, i, i) == module.dims[i]


def test_figure3_containment_count(fig3):
    assert relation_rank(homology_module(fig3, 0), 6, 8) == 2


@given(n=st.integers(1, 10), m=st.integers(0, 30), seed=st.integers(0, 2**32),
       p=st.integers(0, 1))
def test_ranks_shrink_as_intervals_widen(n, m, seed, p):
    r = relation_ranks(homology_module(generate_random(n, m, seed), p))
    for i, j in itertools.combinations_with_replacement(range(m + 1), 2):
        if i > 0:
            assert r[i - 1][j] <= r[i][j]
        if j < m:
            assert r[i][j + 1] <= r[i][j]


def test_figures_and_empty(fig3, fig5):
    assert oracle_barcode(fig3, 0) == Barcode.of(0, FIG3_BARCODE)
    assert oracle_barcode(fig5, 1) == Barcode.of(1, FIG5_BARCODE)
    empty = parse_filtration("")
    assert oracle_barcode(empty, 0) == Barcode(0) and oracle_barcode(empty, 1) == Barcode(1)


def test_figure3_classification(fig3):
    pos, neg = classify_indices(fig3, 0)
    assert pos == [1, 2, 4, 6, 7, 8]
    assert neg == [2, 4, 8, 9, 10, 10]


def test_add_only_deaths_are_all_at_the_end():
    verts = parse_filtration("+v 0\n+v 1\n+v 2\n")
    assert classify_indices(verts, 0)[1] == [3, 3, 3]
    cycles = parse_filtration("+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n+e 0 2\n+v 3\n+e 2 3\n+e 0 3\n")
    assert classify_indices(cycles, 1)[1] == [9, 9]


@given(n=st.integers(1, 12), m=st.integers(0, 40), seed=st.integers(0, 2**32),
       model=st.sampled_from(MODELS), p=st.integers(0, 1))
def test_classes_match_interval_endpoints(n, m, seed, model, p):
    filt = generate_random(n, m, seed, model)
    bc = oracle_barcode(filt, p)
    pos, neg = classify_indices(filt, p)
    assert len(pos) == len(neg) == len(bc)
    assert pos == sorted(iv.birth for iv in bc)
    assert neg == sorted(iv.death for iv in bc)
    assert bc.betti_profile(m) == betti_profile(filt, p)


def test_guards():
    with pytest.raises(OracleError, match="guard"):
        oracle_barcode(generate_random(4, 80, 1), 0)
    with pytest.raises(OracleError, match="guard"):
        oracle_barcode(generate_random(40, 60, 1, "insert-heavy"), 0, max_snapshot=10)


def test_two_complexes_supported():
    text = "dim 2\n+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n+e 0 2\n+t 0 1 2\n-t 0 1 2\n"
    assert oracle_barcode(parse_filtration(text), 1) == Barcode.of(1, [(6, 6), (8, 8)])
