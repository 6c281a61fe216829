"""Oracle equivalence sweep over dimensions 0, 1 and codim 1.

    python3 scripts/verify_oracle.py --trials 1000
"""

import argparse
import sys

from zzgraph.cli import main as cli


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--reproducers", default="reproducers")
    args = ap.parse_args()
    worst = 0
    for dim in ("0", "1", "codim1"):
        code = cli(["verify", "--dim", dim, "--trials", str(args.trials), "--seed", str(args.seed),
                    "--max-n", "12", "--max-m", "40", "--reproducers", args.reproducers])
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
