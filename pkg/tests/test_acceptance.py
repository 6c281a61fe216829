"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` (about four minutes on
one core, dominated by the scaling benchmark and the structure oracles).
"""

import json
import random
import time

import pytest

from zzgraph import (Barcode, ZeroStats, compute_barcode0, compute_barcode1, compute_codim1,
                     generate_planar, generate_random, oracle_barcode)
from zzgraph._checks import CHECK_OK, run_checked_script
from zzgraph.cli import bench_once, main, warm_up
from zzgraph.reference import bfs_components

from conftest import DATA, FIG3_BARCODE, FIG5_BARCODE

MODELS = ["dynamic-er", "insert-heavy", "churn"]


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail
    return emit


def _cli_compute(capsys, dim, path):
    """Run ``compute`` once to warm up, then again; return (barcode, compute seconds)."""
    argv = ["compute", "--dim", dim, "--input", str(path), "--format", "json"]
    main(argv)
    capsys.readouterr()
    assert main(argv) == 0
    out, err = capsys.readouterr()
    doc = json.loads(out)
    rep = json.loads(err.strip().splitlines()[-1])
    return Barcode.of(doc["dim"], doc["intervals"]), rep["phases"]["compute"]


def test_criterion_1_figure3(capsys, report):
    bc, secs = _cli_compute(capsys, "0", DATA / "fig3.zz")
    ok = bc == Barcode.of(0, FIG3_BARCODE) and secs < 0.010
    report(1, ok, f"compute --dim 0 on figure 3 gives {bc.pairs()}, compute phase {secs * 1e3:.2f} ms")


def test_criterion_2_figure5(capsys, report):
    bc, secs = _cli_compute(capsys, "1", DATA / "fig5.zz")
    ok = bc == Barcode.of(1, FIG5_BARCODE) and secs < 0.010
    report(2, ok, f"compute --dim 1 on figure 5 gives {bc.pairs()}, compute phase {secs * 1e3:.2f} ms")


def test_criterion_3_oracle_equivalence(capsys, tmp_path, report):
    t0 = time.perf_counter()
    verdicts = []
    for dim in ("0", "1"):
        code = main(["verify", "--dim", dim, "--trials", "1000", "--seed", "2024",
                     "--max-n", "12", "--max-m", "40", "--reproducers", str(tmp_path)])
        rep = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        verdicts.append((dim, code, rep["extra"]["checked"], rep["extra"]["failed"]))
    secs = time.perf_counter() - t0
    ok = all(code == 0 and checked == 1000 and failed == 0
             for _, code, checked, failed in verdicts) and secs < 120
    detail = ", ".join(f"dim {d}: {c - f}/{c} match" for d, _, c, f in verdicts)
    report(3, ok, f"{detail}; {secs:.1f} s total")


def _betti_profiles(filt):
    """Components and E - V + C of every snapshot, recomputed from scratch."""
    b0, b1 = [], []
    for snap in filt.snapshots():
        verts = sorted(s.verts[0] for s in snap if s.dim == 0)
        index = {v: i for i, v in enumerate(verts)}
        edges = [(index[a], index[b]) for a, b in (s.verts for s in snap if s.dim == 1)]
        c = len(set(bfs_components(len(verts), edges)))
        b0.append(c)
        b1.append(len(edges) - len(verts) + c)
    return b0, b1


def test_criterion_4_betti_profiles(report):
    rng = random.Random(4)
    bad = 0
    for t in range(1000):
        filt = generate_random(rng.randint(1, 30), rng.randint(0, 200), rng.getrandbits(32),
                               MODELS[t % 3])
        b0, b1 = _betti_profiles(filt)
        bad += compute_barcode0(filt).betti_profile(filt.m) != b0
        bad += compute_barcode1(filt).betti_profile(filt.m) != b1
    report(4, bad == 0, f"{2000 - bad}/2000 barcodes (1000 filtrations, dims 0 and 1) match "
                        "per-index Betti numbers")


def test_criterion_5_structure_oracles(report):
    run_checked_script(64, 50, 0, msf=True)
    t0 = time.perf_counter()
    fails = []
    for seed in range(100):
        for msf in (False, True):
            status, op = run_checked_script(64, 10_000, seed, msf=msf)
            if status != CHECK_OK:
                fails.append((seed, msf, status, op))
    secs = time.perf_counter() - t0
    report(5, not fails and secs < 60,
           f"200 scripts x 10^4 ops at n=64 (100 DynConn vs BFS, 100 DynMsf vs Kruskal and "
           f"path scan), {len(fails)} mismatches, {secs:.1f} s")


def test_criterion_6_duality(report):
    flat_bad = 0
    for seed in range(200):
        rng = random.Random(seed)
        filt = generate_planar(rng.randint(3, 14), rng.randint(0, 80), seed, triangles=False)
        flat_bad += compute_codim1(filt) != compute_barcode1(filt)
    tri_bad = tri_arrows = kept = 0
    seed = 0
    while kept < 50:
        rng = random.Random(10_000 + seed)
        filt = generate_planar(rng.randint(3, 8), rng.randint(10, 40), 10_000 + seed)
        seed += 1
        n_tri = sum(a.simplex.dim == 2 for a in filt.arrows)
        if not n_tri:
            continue
        kept += 1
        tri_arrows += n_tri
        tri_bad += compute_codim1(filt) != oracle_barcode(filt, 1)
    ok = flat_bad == 0 and tri_bad == 0
    report(6, ok, f"triangle-free: {200 - flat_bad}/200 codim1 = dim 1; with triangles: "
                  f"{50 - tri_bad}/50 codim1 = oracle H1 ({tri_arrows} triangle arrows)")


def test_criterion_7_scaling(report):
    warm_up()
    rows0 = [bench_once("0", m, 1, "insert-heavy", 50, repeat=2)
             for m in (100_000, 200_000, 400_000, 800_000)]
    rows1 = [bench_once("1", m, 1, "insert-heavy", 50, repeat=3)
             for m in (10_000, 20_000, 40_000, 80_000)]
    r0 = [b["wall"] / a["wall"] for a, b in zip(rows0, rows0[1:])]
    r1 = [b["wall"] / a["wall"] for a, b in zip(rows1, rows1[1:])]
    big = rows0[-1]["wall"]
    ok = all(r <= 2.6 for r in r0) and all(r <= 2.8 for r in r1) and big < 30
    report(7, ok, "dim 0 ratios " + ", ".join(f"{r:.2f}" for r in r0)
           + "; dim 1 ratios " + ", ".join(f"{r:.2f}" for r in r1)
           + f"; dim 0 at 8e5 arrows {big:.2f} s")


def test_criterion_8_amortization(report):
    rng = random.Random(8)
    worst = 0.0
    bad = runs = 0
    for t in range(300):
        filt = generate_random(rng.randint(1, 40), rng.randint(0, 2000), rng.getrandbits(32),
                               MODELS[t % 3])
        stats = ZeroStats()
        compute_barcode0(filt, stats=stats)
        runs += 1
        bad += stats.scan_visits > stats.nodes_created
        if stats.nodes_created:
            worst = max(worst, stats.scan_visits / stats.nodes_created)
    big = ZeroStats()
    compute_barcode0(generate_random(2000, 200_000, 8, "churn"), stats=big)
    runs += 1
    bad += big.scan_visits > big.nodes_created
    report(8, bad == 0, f"{runs - bad}/{runs} runs with scan visits <= nodes created "
                        f"(worst ratio {worst:.3f}; 2e5-arrow run {big.scan_visits} visits, "
                        f"{big.nodes_created} nodes)")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
