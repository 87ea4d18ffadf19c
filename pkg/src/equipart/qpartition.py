"""Integer arithmetic on q-partitions.

A q-partition of ``n`` writes ``n = a*q + b*(q+1)`` with ``a, b >= 0``.  Every
comparison here is done on integers; nothing goes through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from equipart.errors import InvalidArgument, NoPartition, PreconditionViolation


@dataclass(frozen=True)
class QPartition:
    n: int
    q: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.q < 1 or self.a < 0 or self.b < 0:
            raise InvalidArgument(f"bad q-partition fields {self!r}")
        if self.a * self.q + self.b * (self.q + 1) != self.n:
            raise InvalidArgument(
                f"{self.a}*{self.q} + {self.b}*{self.q + 1} != {self.n}"
            )

    @property
    def addends(self) -> int:
        return self.a + self.b

    def terms(self) -> tuple[int, ...]:
        """Addends in ascending order."""
        return (self.q,) * self.a + (self.q + 1,) * self.b

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms())


class Classification(NamedTuple):
    is_minimal: bool
    is_maximal: bool


class Demotion(NamedTuple):
    upper: QPartition  # maximal q-partition
    lower: QPartition  # minimal (q-1)-partition
    delta: int


def _check(n: int, q: int) -> None:
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    if q < 1:
        raise InvalidArgument(f"q must be >= 1, got {q}")


def exists_qpartition(n: int, q: int) -> bool:
    _check(n, q)
    k, r = divmod(n, q)
    return r <= k


def minimal_qpartition(n: int, q: int) -> QPartition | None:
    """The unique q-partition of ``n`` with the fewest addends, or None."""
    if not exists_qpartition(n, q):
        return None
    t = -(-n // (q + 1))
    b = n - q * t
    return QPartition(n, q, t - b, b)


def maximal_qpartition(n: int, q: int) -> QPartition | None:
    """The unique q-partition of ``n`` with the most addends, or None."""
    if not exists_qpartition(n, q):
        return None
    t, b = divmod(n, q)
    return QPartition(n, q, t - b, b)


def classify(p: QPartition) -> Classification:
    return Classification(is_minimal=p.a < p.q + 1, is_maximal=p.b < p.q)


def split_step(p: QPartition) -> QPartition:
    """Trade q copies of q+1 for q+1 copies of q: one more addend.

    Only possible while the partition is not maximal (``b >= q``).
    """
    if p.b < p.q:
        raise PreconditionViolation(
            f"{p} is maximal (b={p.b} < q={p.q}); cannot split"
        )
    return QPartition(p.n, p.q, p.a + p.q + 1, p.b - p.q)


def demote_level(n: int, q: int) -> Demotion:
    """Compare the maximal q-partition of ``n`` with its minimal (q-1)-partition.

    The lower one has the same number of addends when ``q | n`` and exactly
    one more otherwise.
    """
    if q < 2:
        raise InvalidArgument(f"demote_level needs q >= 2, got {q}")
    upper = maximal_qpartition(n, q)
    lower = minimal_qpartition(n, q - 1)
    if upper is None:
        raise NoPartition(f"{n} has no {q}-partition")
    if lower is None:
        raise NoPartition(f"{n} has no {q - 1}-partition")
    return Demotion(upper, lower, lower.addends - upper.addends)
