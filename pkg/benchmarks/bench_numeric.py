"""Benchmark the zeta-evaluation kernel: numba @njit vs pure numpy.

Run:  python3 benchmarks/bench_numeric.py [--terms 200000] [--repeat 5]

The workload evaluates every admissible zeta index of weight <= 7 at the
given truncation.  The numba path is compiled once before timing.
"""

from __future__ import annotations

import argparse
import itertools
import time

import numpy as np

from mzvshuffle.numeric import HAVE_NUMBA, _dp_numpy

if HAVE_NUMBA:
    from mzvshuffle.numeric import _dp_numba


def admissible_indices(max_weight: int):
    for weight in range(2, max_weight + 1):
        for depth in range(1, weight):
            for rest in itertools.product(range(1, weight), repeat=depth - 1):
                k1 = weight - sum(rest)
                if k1 >= 2:
                    yield (k1,) + rest


def run(kernel, indices, terms: int) -> float:
    total = 0.0
    for ks in indices:
        value, _ = kernel(np.asarray(ks, dtype=np.int64), terms)
        total += value
    return total


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--terms", type=int, default=200_000)
    parser.add_argument("--max-weight", type=int, default=7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    indices = list(admissible_indices(args.max_weight))
    print(f"workload: {len(indices)} zeta indices of weight <= {args.max_weight}, "
          f"{args.terms} terms each")

    kernels = [("numpy", _dp_numpy)]
    if HAVE_NUMBA:
        _dp_numba(np.asarray((2,), dtype=np.int64), 64)  # compile outside the timer
        kernels.append(("numba", _dp_numba))
    else:
        print("numba not importable; benchmarking the numpy fallback only")

    results = {}
    for name, kernel in kernels:
        best = float("inf")
        checksum = 0.0
        for _ in range(args.repeat):
            start = time.perf_counter()
            checksum = run(kernel, indices, args.terms)
            best = min(best, time.perf_counter() - start)
        results[name] = best
        print(f"{name:>6}: {best:8.3f} s (best of {args.repeat}), checksum {checksum:.12f}")

    if len(results) == 2:
        print(f"speedup numba vs numpy: {results['numpy'] / results['numba']:.2f}x")


if __name__ == "__main__":
    main()
