"""Benchmark the compiled kernels against the pure-Python fallback.

Three workloads exercise the enumeration inner loop:

  * dense grid: count the order ideals of every size in an 8x8 grid
    poset, 64 points, pure kernel stepping with no Python in the loop
    (the total must come out as C(16, 8) = 12870);
  * diagrams: count the order ideals with e cells in an e x e grid
    (the two-color shifted-family count, equal to the e-th partition
    number), kernel work behind one library call;
  * uniqueness: verify flag-vector uniqueness of the cone extension for
    every color-shifted two-color complex within a vertex bound, the
    end-to-end search path where Python-side layer bookkeeping
    dominates.

Run after installing the package:  python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import argparse
import time

from flagshift import _kernels
from flagshift.oracle import (
    count_two_color_shifted_by_edges,
    enumerate_color_shifted_complexes,
    verify_uniqueness,
)


def _grid_preds(rows: int, cols: int) -> list[int]:
    preds = []
    for r in range(rows):
        for c in range(cols):
            mask = 0
            if r > 0:
                mask |= 1 << ((r - 1) * cols + c)
            if c > 0:
                mask |= 1 << (r * cols + c - 1)
            preds.append(mask)
    return preds


def time_once(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def bench_dense_grid() -> list[tuple[str, float, float]]:
    preds = _grid_preds(8, 8)
    full = (1 << 64) - 1
    unbounded = 1 << 40

    def run():
        total = 0
        for size in range(65):
            count, _, done = _kernels.count_ideals_of_size(
                preds, full, size, unbounded
            )
            assert done
            total += count
        assert total == 12870  # C(16, 8) lattice paths

    per_backend = {}
    for name in ("pure", "compiled"):
        if name == "compiled" and not _kernels.compiled_available():
            per_backend[name] = float("nan")
            continue
        _kernels.set_backend(name)
        per_backend[name] = time_once(run)
    return [("dense grid 8x8, all sizes", per_backend["pure"], per_backend["compiled"])]


def bench_diagrams(sizes: list[int]) -> list[tuple[str, float, float]]:
    rows = []
    for e in sizes:
        per_backend = {}
        for name in ("pure", "compiled"):
            if name == "compiled" and not _kernels.compiled_available():
                per_backend[name] = float("nan")
                continue
            _kernels.set_backend(name)
            per_backend[name] = min(
                time_once(lambda: count_two_color_shifted_by_edges(e))
                for _ in range(3)
            )
        rows.append((f"diagrams e={e}", per_backend["pure"], per_backend["compiled"]))
    return rows


def bench_uniqueness(bound: int) -> list[tuple[str, float, float]]:
    deltas = list(enumerate_color_shifted_complexes(2, [bound, bound]))

    def run():
        for delta in deltas:
            assert verify_uniqueness(delta).unique is True

    per_backend = {}
    for name in ("pure", "compiled"):
        if name == "compiled" and not _kernels.compiled_available():
            per_backend[name] = float("nan")
            continue
        _kernels.set_backend(name)
        per_backend[name] = time_once(run)
    return [
        (
            f"uniqueness 2 colors <={bound} vertices ({len(deltas)} complexes)",
            per_backend["pure"],
            per_backend["compiled"],
        )
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--sizes", default="6,7,8", help="comma-separated diagram sizes"
    )
    parser.add_argument(
        "--bound", type=int, default=3, help="vertex bound for the uniqueness workload"
    )
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not _kernels.compiled_available():
        print("note: compiled kernel unavailable, showing pure-Python times only\n")
    rows = bench_dense_grid() + bench_diagrams(sizes) + bench_uniqueness(args.bound)
    _kernels.set_backend("compiled" if _kernels.compiled_available() else "pure")

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for label, pure, compiled in rows:
        if compiled != compiled:  # NaN
            print(f"{label:<{width}}  {pure:>9.4f}s  {'-':>10}  {'-':>8}")
        else:
            print(
                f"{label:<{width}}  {pure:>9.4f}s  {compiled:>9.4f}s  "
                f"{pure / compiled:>7.1f}x"
            )


if __name__ == "__main__":
    main()
