"""Critical level h and the equitable chromatic threshold of K_{n_1,...,n_l}.

``h`` is the least q at which either

* A: some part admits no q-partition (``n_i > (q+1) * (n_i // q)``), or
* B: two distinct parts are both not divisible by q,

and the threshold is ``sum(ceil(n_i / h))``.  Two routes to ``h`` exist: a
plain scan from q = 1 (:func:`compute_h_scan`) and the vectorised algorithm
that starts at s* (:func:`compute_h_fast`).  They must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable

import numpy as np

from equipart.errors import InvalidArgument, UnsupportedInstance
from equipart.qpartition import minimal_qpartition

# int64 is exact well past this; larger inputs fall back to Python ints.
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class PartSizes:
    sizes: tuple[int, ...]
    total: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        sizes = tuple(int(n) for n in self.sizes)
        if not sizes:
            raise InvalidArgument("need at least one part")
        if min(sizes) < 1:
            raise InvalidArgument(f"part sizes must be positive: {sizes}")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "total", sum(sizes))

    def __len__(self) -> int:
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)

    def __getitem__(self, i: int) -> int:
        return self.sizes[i]

    @cached_property
    def array(self) -> np.ndarray:
        if self.total < _INT64_SAFE:
            return np.array(self.sizes, dtype=np.int64)
        return np.array(self.sizes, dtype=object)


def as_parts(parts: PartSizes | Iterable[int]) -> PartSizes:
    if isinstance(parts, PartSizes):
        return parts
    if isinstance(parts, np.ndarray):
        return PartSizes(tuple(parts.tolist()))
    return PartSizes(tuple(parts))


class StopKind(str, Enum):
    NO_Q_PARTITION = "NO_Q_PARTITION"
    TWO_NONDIVISIBLE = "TWO_NONDIVISIBLE"


@dataclass(frozen=True)
class StopReason:
    kind: StopKind
    witnesses: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "witnesses": list(self.witnesses)}


@dataclass(frozen=True)
class ThresholdReport:
    parts: PartSizes
    s_star: int
    h: int
    reason: StopReason
    chi_star: int

    @cached_property
    def initial_counts(self) -> tuple[tuple[int, int], ...]:
        """(a_i, b_i) of the minimal (h-1)-partition of each part."""
        counts = []
        for n in self.parts:
            p = minimal_qpartition(n, self.h - 1)
            # every level below h admits a partition of every part
            assert p is not None, (n, self.h)
            counts.append((p.a, p.b))
        return tuple(counts)

    def to_dict(self) -> dict:
        return {
            "parts": list(self.parts.sizes),
            "s_star": self.s_star,
            "h": self.h,
            "reason": self.reason.to_dict(),
            "chi_star": self.chi_star,
        }


def s_star(n: int) -> int:
    """Least positive integer that does not divide ``n``."""
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    s = 2
    while n % s == 0:
        s += 1
    return s


def s_star_all(parts: PartSizes | Iterable[int]) -> int:
    # min_i s*(n_i) is the least s failing to divide some part
    arr = as_parts(parts).array
    s = 2
    while not (arr % s).any():
        s += 1
    return s


def _no_partition(n: int, q: int) -> bool:
    return n > (q + 1) * (n // q)


def compute_h_scan(parts: PartSizes | Iterable[int]) -> tuple[int, StopReason]:
    """Definitional scan over q = 1, 2, ...; pure Python, no shortcuts."""
    sizes = as_parts(parts).sizes
    q = 1
    while True:
        nondiv = [i for i, n in enumerate(sizes) if n % q]
        if len(nondiv) >= 2:
            return q, StopReason(StopKind.TWO_NONDIVISIBLE, (nondiv[0], nondiv[1]))
        starved = [i for i, n in enumerate(sizes) if _no_partition(n, q)]
        if starved:
            return q, StopReason(StopKind.NO_Q_PARTITION, (starved[0],))
        q += 1


def compute_h_fast(parts: PartSizes | Iterable[int]) -> tuple[int, StopReason]:
    """Start at s* and step h upward, touching every part once per step.

    Levels that divide every part carry no stopping condition and are
    skipped; below s* that is always the case.
    """
    ps = as_parts(parts)
    arr = ps.array
    h = s_star_all(ps)
    while True:
        nondiv = np.flatnonzero(arr % h)
        if len(nondiv) >= 2:
            return h, StopReason(
                StopKind.TWO_NONDIVISIBLE, (int(nondiv[0]), int(nondiv[1]))
            )
        if len(nondiv) == 1:
            i = int(nondiv[0])
            if _no_partition(ps.sizes[i], h):
                return h, StopReason(StopKind.NO_Q_PARTITION, (i,))
        h += 1


def chi_star(parts: PartSizes | Iterable[int]) -> ThresholdReport:
    """Equitable chromatic threshold of the complete multipartite graph."""
    ps = as_parts(parts)
    if len(ps) < 2:
        raise UnsupportedInstance(
            "a single part is an edgeless graph (threshold 1); "
            "the closed form needs at least two parts"
        )
    h, reason = compute_h_fast(ps)
    arr = ps.array
    chi = int((-(-arr // h)).sum())
    return ThresholdReport(ps, s_star_all(ps), h, reason, chi)


def chi_star_equal(n: int, r: int) -> int:
    """Threshold of K_{n,...,n} with r parts: ``r * ceil(n / s*(n))``."""
    if r < 2:
        raise InvalidArgument(f"r must be >= 2, got {r}")
    s = s_star(n)
    return r * -(-n // s)
