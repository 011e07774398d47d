"""Benchmark the compiled edit-distance kernel against the pure-Python one
on the workload that actually dominates suite building: ranking every
ordering of a 7-affix record against its gold surface.

Usage: python3 benchmarks/bench_levenshtein.py [repeats]
"""
import sys
import time
from itertools import permutations

from morphsuite._kernels_py import levenshtein as pure_levenshtein

try:
    from morphsuite._kernels import levenshtein as c_levenshtein
except ImportError:
    c_levenshtein = None

ROOT = "sınıf"
SUFFIXES = ["lan", "dır", "ıl", "ma", "lar", "ı", "nı"]


def workload():
    gold = ROOT + "".join(SUFFIXES)
    surfaces = [ROOT + "".join(p) for p in permutations(SUFFIXES)]
    return gold, surfaces


def time_backend(fn, gold, surfaces, repeats):
    best = float("inf")
    checksum = 0
    for _ in range(repeats):
        start = time.perf_counter()
        checksum = sum(fn(s, gold) for s in surfaces)
        best = min(best, time.perf_counter() - start)
    return best, checksum


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    gold, surfaces = workload()
    n = len(surfaces)
    print(f"{n} candidate orderings of {ROOT!r} + {len(SUFFIXES)} affixes, best of {repeats}")

    py_time, py_sum = time_backend(pure_levenshtein, gold, surfaces, repeats)
    print(f"pure python: {py_time:.4f} s  ({n / py_time:,.0f} candidates/s)")

    if c_levenshtein is None:
        print("compiled kernel not built (pip install -e . with a C toolchain)")
        return
    c_time, c_sum = time_backend(c_levenshtein, gold, surfaces, repeats)
    assert c_sum == py_sum, "backends disagree"
    print(f"compiled:    {c_time:.4f} s  ({n / c_time:,.0f} candidates/s)")
    print(f"speedup:     {py_time / c_time:.1f}x")


if __name__ == "__main__":
    main()
