"""Timing of :func:`equipart.threshold.chi_star` on growing random instances."""

from __future__ import annotations

import time

import numpy as np

from equipart.threshold import PartSizes, chi_star


def doubling_sizes(max_l: int = 10**6, steps: int = 11) -> list[int]:
    """Part counts max_l / 2^(steps-1), ..., max_l / 2, max_l."""
    return [max_l >> (steps - 1 - j) for j in range(steps)]


def random_parts(l: int, max_n: int, rng: np.random.Generator) -> PartSizes:
    return PartSizes(tuple(rng.integers(1, max_n + 1, size=l).tolist()))


def time_chi_star(parts: PartSizes, repeat: int = 3) -> float:
    """Best-of-``repeat`` wall time, each on a fresh copy (no cached arrays)."""
    best = float("inf")
    for _ in range(repeat):
        fresh = PartSizes(parts.sizes)
        t0 = time.perf_counter()
        chi_star(fresh)
        best = min(best, time.perf_counter() - t0)
    return best


def run_bench(
    max_l: int = 10**6,
    steps: int = 11,
    max_n: int = 10**6,
    seed: int = 0,
    repeat: int = 3,
) -> list[tuple[int, float]]:
    rng = np.random.default_rng(seed)
    rows = []
    for l in doubling_sizes(max_l, steps):
        rows.append((l, time_chi_star(random_parts(l, max_n, rng), repeat)))
    return rows
