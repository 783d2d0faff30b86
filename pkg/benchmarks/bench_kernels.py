#!/usr/bin/env python3
"""Benchmark the jit kernels against the pure-Python fallback.

Each workload runs in a child process so the CHIBOUNDS_PURE_PYTHON flag can
select the path cleanly; compilation happens during a warmup pass and is
excluded from the timings.

Usage: python benchmarks/bench_kernels.py [--n 6] [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

SNIPPET = r"""
import json
import sys
import time

import numpy as np

from chibounds import _kernels, sweep_labeled
from chibounds.harness import _edge_pairs

n = int(sys.argv[1])
repeat = int(sys.argv[2])

_kernels.warmup()

timings = {}

best = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter()
    summary = sweep_labeled(n)
    best = min(best, time.perf_counter() - t0)
assert summary.violations_total == 0
timings[f"sweep_labeled(n={n})"] = best

pairs = _edge_pairs(n)
pair_i = np.array([i for i, _ in pairs], dtype=np.int64)
pair_j = np.array([j for _, j in pairs], dtype=np.int64)
total = 1 << len(pairs)
out = [np.zeros(total, np.int32) for _ in range(3)]
conn = np.zeros(total, np.uint8)
best = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter()
    _kernels.sweep_masks(n, 0, total, pair_i, pair_j, out[0], out[1], out[2], conn)
    best = min(best, time.perf_counter() - t0)
timings[f"chi+degeneracy+connectivity kernel ({total} graphs)"] = best

print(json.dumps({"pure_python": _kernels.PURE_PYTHON, "timings": timings}))
"""


def run_mode(pure: bool, n: int, repeat: int) -> dict:
    env = dict(os.environ, CHIBOUNDS_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", SNIPPET, str(n), str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6,
                    help="order for the labeled-enumeration workloads")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    jit = run_mode(False, args.n, args.repeat)
    pure = run_mode(True, args.n, args.repeat)
    assert not jit["pure_python"] and pure["pure_python"]

    width = max(len(k) for k in jit["timings"])
    print(f"{'workload':<{width}}  {'jit':>10}  {'pure-python':>12}  {'speedup':>8}")
    for key in jit["timings"]:
        a = jit["timings"][key]
        b = pure["timings"][key]
        print(f"{key:<{width}}  {a:>9.3f}s  {b:>11.3f}s  {b / a:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
