"""Command-line front end: ``compute``, ``verify``, ``bench`` and ``gen``.

Exit codes: 0 success, 1 bad input or a failed verification, 2 internal
invariant failure. Run reports are JSON lines on standard output (on
standard error when the barcode itself goes to standard output).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .barcode import Barcode, serialize_barcode
from .duality import DualityError, compute_codim1, generate_planar, parse_dual_file
from .filtration import FiltrationError, ZigzagFiltration, format_filtration, parse_filtration
from .generate import MODELS, GeneratorConfig, generate_random
from .oracle import OracleError, oracle_barcode
from .planar import EmbeddingError
from .script import encode_graph
from .zigzag0 import compute_barcode0, run_script0
from .zigzag1 import PairingError, compute_barcode1, run_script1

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2
_INPUT_ERRORS = (FiltrationError, EmbeddingError, OSError, UnicodeDecodeError)
_INTERNAL_ERRORS = (PairingError, DualityError, OracleError, AssertionError, RuntimeError)


@dataclass
class RunReport:
    command: str
    params: dict = field(default_factory=dict)
    input_digest: str | None = None
    phases: dict = field(default_factory=dict)
    output: str | None = None
    verdict: str | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {k: v for k, v in asdict(self).items() if v not in (None, {}, [])}
        return json.dumps(doc, sort_keys=True)


def _emit(report: RunReport, stream=None) -> None:
    print(report.to_json(), file=stream or sys.stdout, flush=True)


def _fail(msg: str, code: int) -> int:
    print(f"zzgraph: {msg}", file=sys.stderr)
    return code


def compute(filt: ZigzagFiltration, dim: str, duals=None) -> Barcode:
    if dim == "0":
        return compute_barcode0(filt)
    if dim == "1":
        return compute_barcode1(filt)
    if dim == "codim1":
        return compute_codim1(filt, duals)
    raise ValueError(f"unknown dimension {dim!r}")


# ------------------------------------------------------------------ compute

def cmd_compute(args) -> int:
    report = RunReport("compute", {"dim": args.dim, "format": args.format})
    t0 = time.perf_counter()
    try:
        data = sys.stdin.buffer.read() if args.input == "-" else Path(args.input).read_bytes()
        report.input_digest = hashlib.sha256(data).hexdigest()
        filt = parse_filtration(data)
        duals = parse_dual_file(Path(args.dual).read_text()) if args.dual else None
    except _INPUT_ERRORS as exc:
        return _fail(str(exc), EXIT_INPUT)
    t1 = time.perf_counter()
    try:
        bc = compute(filt, args.dim, duals)
    except _INTERNAL_ERRORS as exc:
        return _fail(f"internal invariant failure: {exc}", EXIT_INTERNAL)
    except (ValueError, OSError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    t2 = time.perf_counter()
    payload = serialize_barcode(bc, args.format)
    if args.output and args.output != "-":
        Path(args.output).write_bytes(payload)
        report.output = args.output
        stream = sys.stdout
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
        stream = sys.stderr
    report.phases = {"parse": t1 - t0, "compute": t2 - t1}
    report.verdict = "ok"
    report.extra = {"intervals": len(bc), "arrows": filt.m}
    if not args.quiet:
        _emit(report, stream)
    return EXIT_OK


# ------------------------------------------------------------------- verify

@dataclass(frozen=True)
class Trial:
    index: int
    dim: str
    seed: int
    n: int
    m: int
    model: str

    def filtration(self) -> ZigzagFiltration:
        if self.dim == "codim1":
            return generate_planar(self.n, self.m, self.seed, triangles=True)
        return generate_random(self.n, self.m, self.seed, self.model)


def plan_trials(dims: list[str], trials: int, seed: int, max_n: int, max_m: int,
                models: list[str]) -> list[Trial]:
    rng = random.Random(seed)
    out = []
    for i in range(trials):
        for dim in dims:
            s = rng.getrandbits(48)
            if dim == "codim1":
                n = 3 + rng.randrange(max(1, min(max_n, 8) - 2))
                m = rng.randrange(min(max_m, 40) + 1)
            else:
                n = 1 + rng.randrange(max_n)
                m = rng.randrange(max_m + 1)
            out.append(Trial(i, dim, s, n, m, models[i % len(models)]))
    return out


def _fast(filt: ZigzagFiltration, dim: str, fault: bool) -> Barcode:
    bc = compute(filt, dim)
    if fault and len(bc):
        return Barcode(bc.dim, bc.intervals[:-1])
    return bc


def check_filtration(filt: ZigzagFiltration, dim: str, fault: bool = False):
    """``(fast, oracle)`` barcodes of one filtration."""
    p = 0 if dim == "0" else 1
    return _fast(filt, dim, fault), oracle_barcode(filt, p)


def shrink(filt: ZigzagFiltration, dim: str, fault: bool) -> ZigzagFiltration:
    """Shortest failing prefix, found by bisection over prefix lengths."""
    def fails(k):
        try:
            a, b = check_filtration(filt.prefix(k), dim, fault)
        except _INTERNAL_ERRORS:
            return True
        return a != b

    lo, hi = 0, filt.m
    if not fails(hi):
        return filt
    while lo < hi:
        mid = (lo + hi) // 2
        if fails(mid):
            hi = mid
        else:
            lo = mid + 1
    return filt.prefix(hi)


def run_trial(trial: Trial, fault: bool = False) -> dict:
    filt = trial.filtration()
    try:
        fast, ref = check_filtration(filt, trial.dim, fault)
    except _INTERNAL_ERRORS as exc:
        return {"trial": asdict(trial), "status": "error", "error": str(exc)}
    if fast == ref:
        return {"trial": asdict(trial), "status": "pass"}
    small = shrink(filt, trial.dim, fault)
    try:
        a, b = check_filtration(small, trial.dim, fault)
    except _INTERNAL_ERRORS as exc:
        a = b = None
        note = str(exc)
    else:
        note = ""
    return {"trial": asdict(trial), "status": "fail", "reproducer": format_filtration(small),
            "fast": None if a is None else a.pairs(), "oracle": None if b is None else b.pairs(),
            "note": note}


def _run_trial_packed(args):
    return run_trial(*args)


def _worker_count() -> int:
    raw = os.environ.get("ZZ_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def cmd_verify(args) -> int:
    dims = ["0", "1", "codim1"] if args.dim == "all" else [args.dim]
    models = args.models.split(",") if args.models else list(MODELS)
    bad = [m for m in models if m not in MODELS]
    if bad or args.trials < 0 or args.max_n < 1 or args.max_m < 0:
        return _fail(f"invalid verify parameters{': unknown model ' + bad[0] if bad else ''}",
                     EXIT_INPUT)
    trials = plan_trials(dims, args.trials, args.seed, args.max_n, args.max_m, models)
    t0 = time.perf_counter()
    workers = _worker_count()
    packed = [(t, args.inject_fault) for t in trials]
    if workers > 1 and len(trials) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial_packed, packed, chunksize=16))
    else:
        results = [run_trial(*p) for p in packed]
    elapsed = time.perf_counter() - t0
    failed = [r for r in results if r["status"] == "fail"]
    errors = [r for r in results if r["status"] == "error"]
    repro_dir = Path(args.reproducers)
    written = []
    for r in failed:
        repro_dir.mkdir(parents=True, exist_ok=True)
        t = r["trial"]
        path = repro_dir / f"repro-dim{t['dim']}-seed{t['seed']}.zz"
        header = (f"# dim {t['dim']} trial {t['index']} seed {t['seed']} n {t['n']} m {t['m']} "
                  f"model {t['model']}\n# fast   {r['fast']}\n# oracle {r['oracle']}\n")
        path.write_text(header + r["reproducer"])
        written.append(str(path))
    report = RunReport("verify", {"dim": args.dim, "trials": args.trials, "seed": args.seed,
                                  "max_n": args.max_n, "max_m": args.max_m, "models": models,
                                  "workers": workers})
    report.phases = {"total": elapsed}
    report.verdict = "pass" if not failed and not errors else ("error" if errors else "fail")
    report.extra = {"checked": len(results), "failed": len(failed), "errors": len(errors),
                    "reproducers": written}
    if errors:
        report.extra["first_error"] = errors[0]["error"]
    _emit(report)
    if errors:
        return EXIT_INTERNAL
    return EXIT_OK if not failed else EXIT_INPUT


# -------------------------------------------------------------------- bench

def bench_once(dim: str, m: int, seed: int, model: str, ratio: int, repeat: int = 1) -> dict:
    n = max(8, m // ratio)
    tg = time.perf_counter()
    filt = generate_random(n, m, seed, model)
    gen_s = time.perf_counter() - tg
    best = None
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter()
        script = encode_graph(filt, allow_triangles=(dim == "0"))
        t1 = time.perf_counter()
        out = run_script0(script) if dim == "0" else run_script1(script)
        t2 = time.perf_counter()
        if best is None or t2 - t0 < best[0]:
            best = (t2 - t0, t1 - t0, t2 - t1, len(out))
    return {"m": m, "n": n, "generate": gen_s, "wall": best[0], "encode": best[1],
            "run": best[2], "intervals": best[3]}


def warm_up() -> None:
    """Load or compile the numba kernels so the first timed size is not penalized."""
    f = generate_random(8, 64, 0, "dynamic-er")
    run_script0(encode_graph(f))
    run_script1(encode_graph(f))


def cmd_bench(args) -> int:
    try:
        sizes = [int(float(s)) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        return _fail(f"bad --sizes {args.sizes!r}", EXIT_INPUT)
    if not sizes or any(s < 1 for s in sizes) or args.model not in MODELS or args.vertex_ratio < 1:
        return _fail("invalid bench parameters", EXIT_INPUT)
    warm_up()
    prev = None
    for m in sizes:
        try:
            row = bench_once(args.dim, m, args.seed, args.model, args.vertex_ratio, args.repeat)
        except _INTERNAL_ERRORS as exc:
            return _fail(f"internal invariant failure: {exc}", EXIT_INTERNAL)
        report = RunReport("bench", {"dim": args.dim, "m": m, "n": row["n"], "seed": args.seed,
                                     "model": args.model, "repeat": args.repeat})
        report.phases = {"generate": row["generate"], "encode": row["encode"], "run": row["run"],
                         "wall": row["wall"]}
        report.extra = {"intervals": row["intervals"]}
        if prev is not None:
            report.extra["ratio"] = row["wall"] / prev if prev > 0 else None
        prev = row["wall"]
        _emit(report)
    return EXIT_OK


# ---------------------------------------------------------------------- gen

def cmd_gen(args) -> int:
    try:
        if args.planar:
            if args.n < 1 or args.m < 0:
                raise ValueError("n must be at least 1 and m non-negative")
            filt = generate_planar(args.n, args.m, args.seed, triangles=not args.no_triangles)
        else:
            GeneratorConfig(args.n, args.m, args.seed, args.model)
            filt = generate_random(args.n, args.m, args.seed, args.model)
    except ValueError as exc:
        return _fail(str(exc), EXIT_INPUT)
    text = format_filtration(filt)
    if args.output and args.output != "-":
        Path(args.output).write_text(text)
        report = RunReport("gen", {"n": args.n, "m": args.m, "seed": args.seed,
                                   "model": "planar" if args.planar else args.model})
        report.output = args.output
        report.input_digest = hashlib.sha256(text.encode()).hexdigest()
        report.verdict = "ok"
        _emit(report)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zzgraph", description="Zigzag barcodes of graph filtrations")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute a barcode")
    c.add_argument("--dim", choices=["0", "1", "codim1"], required=True)
    c.add_argument("--input", required=True, help="filtration file, or - for stdin")
    c.add_argument("--output", help="barcode file (default stdout)")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--dual", help="dual-graph file for codim1 (default: planar face tracing)")
    c.add_argument("--quiet", action="store_true", help="no run report")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="compare against the brute-force oracle")
    v.add_argument("--dim", choices=["0", "1", "codim1", "all"], default="all")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-n", type=int, default=12)
    v.add_argument("--max-m", type=int, default=40)
    v.add_argument("--models", help="comma-separated generator models (default all)")
    v.add_argument("--reproducers", default="reproducers", help="directory for failing cases")
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="scaling benchmark")
    b.add_argument("--dim", choices=["0", "1"], required=True)
    b.add_argument("--sizes", required=True, help="comma-separated arrow counts, e.g. 1e5,2e5")
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--model", default="insert-heavy")
    b.add_argument("--vertex-ratio", type=int, default=50, help="n = m / ratio")
    b.add_argument("--repeat", type=int, default=1, help="keep the fastest of this many runs")
    b.set_defaults(func=cmd_bench)

    g = sub.add_parser("gen", help="generate a random filtration")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--model", default="dynamic-er")
    g.add_argument("--planar", action="store_true", help="embedded planar 2-complex")
    g.add_argument("--no-triangles", action="store_true")
    g.add_argument("--output")
    g.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
