#!/usr/bin/env python3
"""Compare the compiled hot-loop extension against the NumPy fallback.

Times the four hot kernels on seeded synthetic data plus one end-to-end
Gram + weight iteration, and prints a speedup table.

Usage: python benchmarks/backend_benchmark.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from kernmedian import _pure
from kernmedian.datagen import gen_rankings, gen_strings

try:
    from kernmedian import _speedups
except ImportError:
    _speedups = None


def best_of(repeats, fn):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    words = gen_strings(1, 40, (80, 120))
    rankings = gen_rankings(2, 30, 80)
    positions = []
    for r in rankings:
        pos = r.positions()
        positions.append(np.array([pos[i] for i in sorted(pos)], dtype=np.int64))

    def lev(mod):
        return lambda: [mod.levenshtein(a, b) for a in words[:12] for b in words[:12]]

    def table(mod):
        return lambda: [mod.levenshtein_table(a, b) for a in words[:8] for b in words[:8]]

    def ssk(mod):
        return lambda: [mod.subsequence_kernel(a, b, 2, 0.5)
                        for a in words[:8] for b in words[:8]]

    def kendall(mod):
        return lambda: [mod.ranking_disagreements(p, q)
                        for p in positions for q in positions]

    return [
        ("levenshtein (144 pairs, len~100)", lev),
        ("levenshtein_table (64 pairs)", table),
        ("subsequence_kernel (64 pairs)", ssk),
        ("ranking_disagreements (900 pairs, 80 items)", kendall),
    ]


def gram_end_to_end(backend_env):
    import importlib
    import os
    import subprocess
    import sys

    code = (
        "import time\n"
        "from kernmedian import ObjectSet, KernelSpec, gram_matrix, kernel_weiszfeld\n"
        "from kernmedian.datagen import gen_strings\n"
        "from kernmedian.domains.strings import levenshtein\n"
        "words = gen_strings(3, 30, (60, 90))\n"
        "t0 = time.perf_counter()\n"
        "gram = gram_matrix(ObjectSet(words), KernelSpec('lin'), levenshtein)\n"
        "kernel_weiszfeld(gram)\n"
        "print(time.perf_counter() - t0)\n"
    )
    env = dict(os.environ)
    env["KERNMEDIAN_PURE"] = backend_env
    out = subprocess.run([sys.executable, "-c", code], capture_output=True,
                         text=True, env=env, check=True)
    return float(out.stdout.strip())


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not available; nothing to compare")
        return 1

    rows = []
    for name, make in workloads():
        t_c = best_of(args.repeats, make(_speedups))
        t_p = best_of(args.repeats, make(_pure))
        rows.append((name, t_c, t_p))

    t_gram_c = gram_end_to_end("0")
    t_gram_p = gram_end_to_end("1")
    rows.append(("gram + weights, 30 strings len~75", t_gram_c, t_gram_p))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}")
    for name, t_c, t_p in rows:
        print(f"{name:<{width}}  {t_c * 1e3:>8.1f}ms  {t_p * 1e3:>8.1f}ms  "
              f"{t_p / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
