"""Differential stress test of DynConn and DynMsf against BFS, Kruskal and path scans.

    python3 scripts/stress_structures.py --scripts 100 --ops 10000 --n 64
"""

import argparse
import time

from zzgraph._checks import CHECK_OK, run_checked_script

NAMES = {1: "connectivity", 2: "msf edges", 3: "path max"}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scripts", type=int, default=100)
    ap.add_argument("--ops", type=int, default=10_000)
    ap.add_argument("--n", type=int, default=64)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--target-edges", type=int, default=128)
    ap.add_argument("--unsorted-weights", type=float, default=0.02,
                    help="fraction of MSF insertions lighter than every live edge")
    args = ap.parse_args()
    run_checked_script(args.n, 10, 0, msf=True)
    failures = 0
    for msf in (False, True):
        t0 = time.perf_counter()
        for s in range(args.seed, args.seed + args.scripts):
            status, op = run_checked_script(args.n, args.ops, s, msf=msf,
                                            target_edges=args.target_edges,
                                            random_weight_frac=args.unsorted_weights)
            if status != CHECK_OK:
                failures += 1
                print(f"seed {s}: {NAMES[status]} mismatch after op {op}")
        label = "DynMsf" if msf else "DynConn"
        print(f"{label}: {args.scripts} scripts x {args.ops} ops in {time.perf_counter() - t0:.1f} s")
    print("all checks passed" if not failures else f"{failures} failing scripts")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
