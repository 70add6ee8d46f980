"""Time decide_ge2_subdivisions with and without the numba kernels.

Each mode runs in its own interpreter so FRAMEGRAPHS_NO_JIT takes effect at
import.  Compilation is excluded by a warm-up call.

    python benchmarks/bench_decide.py
    python benchmarks/bench_decide.py --max-edges 1000000 --pure-max-edges 100000
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def worker(sizes, repeats, seed, ratio):
    from framegraphs import JIT_ENABLED, generators as gen
    from framegraphs.decision import decide_ge2_subdivisions

    decide_ge2_subdivisions(gen.cycle_multigraph(4))
    rng = np.random.default_rng(seed)
    rows = []
    for m in sizes:
        n = max(2, int(m * ratio))
        g = gen.random_connected_multigraph(n, m, rng)
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            answer = decide_ge2_subdivisions(g).answer
            best = min(best, time.perf_counter() - t0)
        rows.append({"edges": m, "seconds": best, "answer": answer})
    print(json.dumps({"jit": JIT_ENABLED, "rows": rows}))


def run_mode(no_jit, sizes, repeats, seed, ratio):
    env = dict(os.environ)
    env.pop("FRAMEGRAPHS_NO_JIT", None)
    if no_jit:
        env["FRAMEGRAPHS_NO_JIT"] = "1"
    cmd = [sys.executable, __file__, "--worker", "--sizes", ",".join(map(str, sizes)),
           "--repeats", str(repeats), "--seed", str(seed), "--ratio", str(ratio)]
    res = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-edges", type=int, default=10**6)
    ap.add_argument("--pure-max-edges", type=int, default=10**5)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--ratio", type=float, default=0.5,
                    help="vertices per edge; near 1 gives tree-like graphs with many blocks")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    ap.add_argument("--sizes", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.worker:
        worker([int(s) for s in args.sizes.split(",")], args.repeats, args.seed, args.ratio)
        return

    sizes = [10**k for k in range(3, 8) if 10**k <= args.max_edges]
    jit = run_mode(False, sizes, args.repeats, args.seed, args.ratio)
    pure = run_mode(True, [m for m in sizes if m <= args.pure_max_edges], args.repeats, args.seed, args.ratio)
    pure_at = {r["edges"]: r for r in pure["rows"]}

    print(f"{'edges':>10} {'numba s':>10} {'ns/edge':>8} {'pure s':>10} {'speedup':>8}")
    for r in jit["rows"]:
        m = r["edges"]
        p = pure_at.get(m)
        pure_s = f"{p['seconds']:10.4f}" if p else f"{'-':>10}"
        speed = f"{p['seconds'] / r['seconds']:7.1f}x" if p else f"{'-':>8}"
        if p:
            assert p["answer"] == r["answer"]
        print(f"{m:>10} {r['seconds']:10.4f} {1e9 * r['seconds'] / m:8.0f} {pure_s} {speed}")
    xs = np.log([r["edges"] for r in jit["rows"]])
    ys = np.log([r["seconds"] for r in jit["rows"]])
    if len(xs) > 1:
        print(f"numba fit exponent: {np.polyfit(xs, ys, 1)[0]:.3f}")


if __name__ == "__main__":
    main()
