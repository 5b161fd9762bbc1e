#!/usr/bin/env python3
"""Compare the compiled scan kernel against the pure-Python fallback.

Runs the same seeded random instances through both backends (checking they
agree) and prints per-size wall times and the speedup.

    python benchmarks/compare_backends.py [--sizes 10000,100000,1000000] [--reps 3]
"""

from __future__ import annotations

import argparse
import time

from rulerwrap import backend
from rulerwrap.experiments import uniform_lengths


def best_time(fn, reps: int) -> float:
    best = None
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="10000,100000,1000000")
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--seed", type=int, default=2)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not backend.compiled_available():
        print("compiled kernel not built; showing pure backend only")

    print(f"{'n':>10}  {'pure (s)':>10}  {'compiled (s)':>12}  {'speedup':>8}")
    for n in sizes:
        lengths = uniform_lengths(args.seed, 0, n, 1, 100)
        listed = lengths.tolist()

        pure = best_time(lambda: backend.scan(listed, force="pure"), args.reps)
        if backend.compiled_available():
            comp = best_time(lambda: backend.scan(lengths, force="compiled"), args.reps)
            a = backend.scan(listed, force="pure")
            b = backend.scan(lengths, force="compiled")
            assert (a.y_n, a.x_n, a.max_occupancy) == (b.y_n, b.x_n, b.max_occupancy)
            print(f"{n:>10}  {pure:>10.4f}  {comp:>12.4f}  {pure / comp:>7.1f}x")
        else:
            print(f"{n:>10}  {pure:>10.4f}  {'-':>12}  {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
