#!/usr/bin/env python3
"""Benchmark the candidate-scan kernel: compiled extension vs pure Python.

The scan enumerates integer triples (w0, w1, t) satisfying the discriminant
and slope-window constraints used by wall enumeration.  Run with:

    python3 benchmarks/bench_wallscan.py [--repeat N]
"""

import argparse
import statistics
import time

from tiltwall.walls import HAVE_COMPILED_KERNEL, _pure_kernel

# (P0, P1, T2, R, DS, w0_lo, w0_hi, bln, bld, bhn, bhd)
CASES = [
    ("small",  (1, 0, -2, 1, 4, -8, 8, -2, 1, 0, 1)),
    ("medium", (2, -3, 4, 2, 60, -24, 24, -3, 1, 1, 1)),
    ("large",  (3, 5, -7, 3, 400, -60, 60, -4, 1, 2, 1)),
]


def time_kernel(fn, args, repeat):
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        samples.append(time.perf_counter() - start)
    return min(samples), statistics.median(samples), len(out)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=20)
    opts = parser.parse_args()

    kernels = [("pure", _pure_kernel.scan_candidates)]
    if HAVE_COMPILED_KERNEL:
        from tiltwall import _wallscan
        kernels.append(("compiled", _wallscan.scan_candidates))
    else:
        print("compiled kernel unavailable; benchmarking pure Python only")

    print(f"{'case':8} {'kernel':9} {'best (ms)':>10} {'median (ms)':>12} "
          f"{'candidates':>11}")
    baselines = {}
    for name, args in CASES:
        results = {}
        for kname, fn in kernels:
            best, med, n = time_kernel(fn, args, opts.repeat)
            results[kname] = (best, n)
            print(f"{name:8} {kname:9} {best * 1e3:10.3f} {med * 1e3:12.3f} "
                  f"{n:11d}")
        if "compiled" in results:
            assert results["compiled"][1] == results["pure"][1], \
                "kernels disagree on candidate count"
            speedup = results["pure"][0] / results["compiled"][0]
            print(f"{name:8} speedup (pure/compiled): {speedup:.1f}x")


if __name__ == "__main__":
    main()
