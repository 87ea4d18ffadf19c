"""Exhaustive ground truth for equitable colorability.

Nothing here uses the q-partition lemmas or the threshold formula; keep it
that way (no imports from qpartition, threshold or coloring) so that
agreement tests against those modules mean something.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from equipart.errors import BudgetExceeded, InvalidArgument


@dataclass(frozen=True)
class OracleBudget:
    max_total: int = 60
    max_vertex_level: int = 10

    def __post_init__(self) -> None:
        if not 0 < self.max_vertex_level <= self.max_total:
            raise InvalidArgument(f"inconsistent budget {self}")


DEFAULT_BUDGET = OracleBudget()


def _sizes(parts: Iterable[int], cap: int) -> tuple[int, ...]:
    sizes = tuple(int(n) for n in parts)
    if not sizes or min(sizes) < 1:
        raise InvalidArgument(f"part sizes must be positive: {sizes}")
    if sum(sizes) > cap:
        raise BudgetExceeded(f"N={sum(sizes)} exceeds oracle budget {cap}")
    return sizes


def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n into positive parts, non-increasing."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _profiles(n: int) -> frozenset[tuple[int, int, int]]:
    """(count, smallest, largest) over every partition of n.

    Partitions whose addends already differ by more than one can never be
    part of an equitable coloring and are dropped.
    """
    return frozenset(
        (len(p), p[-1], p[0]) for p in integer_partitions(n) if p[0] - p[-1] <= 1
    )


def _reachable(sizes: Sequence[int]) -> set[tuple[int, int, int]]:
    """(classes, smallest, largest) over all ways to split every part."""
    states = {(0, None, None)}
    for n in sizes:
        nxt = set()
        for m, lo, hi in states:
            for c, plo, phi in _profiles(n):
                nlo = plo if lo is None else min(lo, plo)
                nhi = phi if hi is None else max(hi, phi)
                if nhi - nlo <= 1:
                    nxt.add((m + c, nlo, nhi))
        states = nxt
    return states


def _colorable(states: set[tuple[int, int, int]], k: int) -> bool:
    for m, lo, hi in states:
        if m == k and hi - lo <= 1:
            return True
        # k - m empty classes of size 0
        if m < k and hi <= 1:
            return True
    return False


def oracle_k_colorable(
    parts: Iterable[int], k: int, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """Is K_{parts} equitably k-colorable?  Enumerates every split of every part."""
    if k < 1:
        raise InvalidArgument(f"k must be >= 1, got {k}")
    sizes = _sizes(parts, budget.max_total)
    return _colorable(_reachable(sizes), k)


def _graph(sizes: Sequence[int]) -> tuple[int, set[frozenset[int]]]:
    label = [i for i, n in enumerate(sizes) for _ in range(n)]
    edges = {
        frozenset((u, v))
        for u, v in combinations(range(len(label)), 2)
        if label[u] != label[v]
    }
    return len(label), edges


def oracle_vertex_level_k_colorable(
    parts: Iterable[int], k: int, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """Search set partitions of the explicit graph's vertex set.

    Vertices are placed one at a time into an existing block or a new one
    (restricted growth), so each set partition is visited once.  Blocks must
    stay independent; equity is checked on complete partitions with the
    k - m unused colors counted as empty classes.
    """
    if k < 1:
        raise InvalidArgument(f"k must be >= 1, got {k}")
    sizes = _sizes(parts, budget.max_vertex_level)
    nv, edges = _graph(sizes)
    cap = -(-nv // k)
    blocks: list[list[int]] = []

    def equitable() -> bool:
        counts = [len(b) for b in blocks] + [0] * (k - len(blocks))
        return max(counts) - min(counts) <= 1

    def place(v: int) -> bool:
        if v == nv:
            return equitable()
        for b in blocks:
            if len(b) < cap and all(frozenset((u, v)) not in edges for u in b):
                b.append(v)
                if place(v + 1):
                    return True
                b.pop()
        if len(blocks) < k:
            blocks.append([v])
            if place(v + 1):
                return True
            blocks.pop()
        return False

    return place(0)


def oracle_chi_star(parts: Iterable[int], budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """1 + the largest k in [1, N] that is not equitably colorable (1 if none)."""
    sizes = _sizes(parts, budget.max_total)
    N = sum(sizes)
    states = _reachable(sizes)
    # k >= N: singletons plus empty classes always work
    assert _colorable(states, N) and _colorable(states, N + 1)
    worst = 0
    for k in range(1, N + 1):
        if not _colorable(states, k):
            worst = k
    return worst + 1


def oracle_chi_eq(parts: Iterable[int], budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Smallest k admitting an equitable k-coloring, by search."""
    sizes = _sizes(parts, budget.max_total)
    states = _reachable(sizes)
    k = 1
    while not _colorable(states, k):
        k += 1
    return k
