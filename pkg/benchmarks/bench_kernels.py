"""Benchmark the compiled kernels against the pure-Python fallback.

Run as `python3 benchmarks/bench_kernels.py`.  Measures the two hot paths:
the continued-fraction half-sum over a coprime grid, and the meg-form
conjugator scan (the full-box no-hit scan is the load that dominates the
verification suite).
"""

import math
import time

from solnorm import _fallback

try:
    from solnorm import _speedups
except ImportError:
    _speedups = None


def bench(label, fn, repeats=3):
    best = min(timed(fn) for _ in range(repeats))
    print(f"  {label:<14} {best * 1000:9.1f} ms")
    return best


def timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


PAIRS = [
    (p, q)
    for p in range(2, 600, 2)
    for q in range(1, 600, 2)
    if math.gcd(p, q) == 1
]


def bw_grid(module):
    fn = module.bw_halfsum
    total = 0
    for p, q in PAIRS:
        total += fn(p, q)
    return total


def meg_scans_hit(module, bound=20):
    cases = [(1, 4, -1, -3), (-1, 0, 9, -1), (-1, 0, 0, -1)]
    return sum(1 for a, c, b, d in cases if module.scan_meg_form(a, c, b, d, bound) is not None)


def meg_scans_miss(module, bound=20):
    # other-trace matrices force a scan of the whole box
    cases = [(2, 1, 1, 1), (3, 2, 4, 3), (0, 1, 1, 0)]
    return sum(1 for a, c, b, d in cases if module.scan_meg_form(a, c, b, d, bound) is not None)


def compare(title, fn):
    print(title)
    pure = bench("pure", lambda: fn(_fallback))
    if _speedups is not None:
        fast = bench("compiled", lambda: fn(_speedups))
        print(f"  speedup        {pure / fast:9.1f}x")
    print()


def main():
    print(f"kernel benchmark over {len(PAIRS)} coprime pairs (lower is better)\n")
    if _speedups is None:
        print("compiled extension not built; showing pure-Python timings only\n")
    compare("bw_halfsum over the coprime grid p < 600 even, q < 600 odd:", bw_grid)
    compare("meg-form conjugator scan, 3 matrices that are hit early, bound 20:", meg_scans_hit)
    compare("meg-form conjugator scan, 3 full-box misses, bound 20:", meg_scans_miss)


if __name__ == "__main__":
    main()
