#!/usr/bin/env python3
"""Benchmark the compiled LEA resolution kernel against the pure-Python twin.

Builds random entity partitions of growing size, runs
``resolution_sums`` from both backends on identical inputs, checks they
agree, and prints the per-call timings side by side.

Usage: python3 benchmarks/bench_lea.py [--sizes 1000 10000 100000]
       [--repeats 5] [--seed 0]
"""
from __future__ import annotations

import argparse
import random
import time

from corefkit import _lea_py

try:
    from corefkit import _lea_c
except ImportError:
    _lea_c = None


def random_partition(rng: random.Random, n_mentions: int) -> list[list[int]]:
    """Split mention ids 0..n-1 into entities of random size 1..40."""
    ids = list(range(n_mentions))
    rng.shuffle(ids)
    entities = []
    at = 0
    while at < n_mentions:
        size = min(rng.randint(1, 40), n_mentions - at)
        entities.append(ids[at:at + size])
        at += size
    return entities


def perturbed(rng: random.Random, entities: list[list[int]]) -> list[list[int]]:
    """A second partition of the same mentions: split some entities in two."""
    out = []
    for entity in entities:
        if len(entity) > 2 and rng.random() < 0.5:
            cut = rng.randint(1, len(entity) - 1)
            out.append(entity[:cut])
            out.append(entity[cut:])
        else:
            out.append(list(entity))
    return out


def best_of(repeats: int, fn, *args) -> float:
    timings = []
    for _ in range(repeats):
        started = time.perf_counter()
        fn(*args)
        timings.append(time.perf_counter() - started)
    return min(timings)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[1_000, 10_000, 100_000])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _lea_c is None:
        print("compiled kernel not built; showing the pure-Python timings only")
    header = f"{'mentions':>10} {'python':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    rng = random.Random(args.seed)
    for n_mentions in args.sizes:
        side_a = random_partition(rng, n_mentions)
        side_b = perturbed(rng, side_a)
        py_num, py_den = _lea_py.resolution_sums(side_a, side_b)
        py_time = best_of(args.repeats, _lea_py.resolution_sums, side_a, side_b)
        if _lea_c is None:
            print(f"{n_mentions:>10} {py_time * 1e3:>10.2f}ms {'-':>12} {'-':>9}")
            continue
        c_num, c_den = _lea_c.resolution_sums(side_a, side_b)
        assert c_den == py_den and abs(c_num - py_num) < 1e-9 * max(1.0, py_num), \
            "kernels disagree"
        c_time = best_of(args.repeats, _lea_c.resolution_sums, side_a, side_b)
        print(f"{n_mentions:>10} {py_time * 1e3:>10.2f}ms "
              f"{c_time * 1e3:>10.2f}ms {py_time / c_time:>8.1f}x")


if __name__ == "__main__":
    main()
