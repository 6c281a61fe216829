"""Scaling benchmark for both dimensions; prints one JSON line per size.

    python3 scripts/bench_scaling.py --dim 0 --sizes 1e5,2e5,4e5,8e5
    python3 scripts/bench_scaling.py --dim 1 --sizes 1e4,2e4,4e4,8e4 --repeat 3
"""

import argparse
import json

from zzgraph.cli import bench_once, warm_up

DEFAULT_SIZES = {"0": "1e5,2e5,4e5,8e5", "1": "1e4,2e4,4e4,8e4"}
LIMITS = {"0": 2.6, "1": 2.8}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", choices=["0", "1"], default="0")
    ap.add_argument("--sizes")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--model", default="insert-heavy")
    ap.add_argument("--vertex-ratio", type=int, default=50)
    ap.add_argument("--repeat", type=int, default=2)
    args = ap.parse_args()
    sizes = [int(float(s)) for s in (args.sizes or DEFAULT_SIZES[args.dim]).split(",")]
    warm_up()
    prev = None
    worst = 0.0
    for m in sizes:
        row = bench_once(args.dim, m, args.seed, args.model, args.vertex_ratio, args.repeat)
        if prev:
            row["ratio"] = row["wall"] / prev
            worst = max(worst, row["ratio"])
        prev = row["wall"]
        print(json.dumps({"dim": args.dim, **row}), flush=True)
    if len(sizes) > 1:
        print(f"# worst consecutive ratio {worst:.2f} (limit {LIMITS[args.dim]})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
