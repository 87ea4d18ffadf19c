"""Equitable colorings of complete multipartite graphs.

Every color class of a proper coloring of K_{n_1,...,n_l} sits inside one
part, so an equitable k-coloring is the same thing as choosing, for every
part, a multiset of class sizes drawn from {q, q+1} for one common q.  A
:class:`ColorPlan` records those multisets; :func:`realize` turns a plan into
an explicit vertex coloring and :func:`validate` checks one from scratch.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from equipart.errors import InvalidArgument, NoPartition, PreconditionViolation
from equipart.qpartition import QPartition, demote_level, split_step
from equipart.threshold import PartSizes, ThresholdReport, as_parts

Vertex = tuple[int, int]  # (part index, offset within part)


@dataclass(frozen=True)
class ColorPlan:
    """Class sizes per part.

    ``k`` is the number of colors.  It equals the number of listed classes,
    except for the all-singletons plan with k > N, where the spare colors
    stay empty.
    """

    parts: PartSizes
    classes: tuple[tuple[int, ...], ...]
    k: int = field(default=-1)

    def __post_init__(self) -> None:
        classes = tuple(tuple(sorted(c)) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        listed = sum(len(c) for c in classes)
        if self.k == -1:
            object.__setattr__(self, "k", listed)
        if len(classes) != len(self.parts):
            raise InvalidArgument("one class list per part required")
        for n, c in zip(self.parts, classes):
            if sum(c) != n or not c or min(c) < 1:
                raise InvalidArgument(f"classes {c} do not tile a part of size {n}")
        sizes = self.sizes()
        if max(sizes) - min(sizes) > 1:
            raise InvalidArgument(f"class sizes {sorted(set(sizes))} are not consecutive")
        if self.k < listed or (self.k > listed and max(sizes) != 1):
            raise InvalidArgument(f"k={self.k} does not match {listed} listed classes")

    @property
    def num_classes(self) -> int:
        return sum(len(c) for c in self.classes)

    def sizes(self) -> list[int]:
        return [s for c in self.classes for s in c]

    def level(self) -> int:
        """Common base size q: all classes lie in {q, q+1}.

        When only one size s occurs the level is taken to be s.
        """
        return min(self.sizes())

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.classes]


@dataclass(frozen=True)
class VertexColoring:
    parts: PartSizes
    color_of: Mapping[Vertex, int]
    k: int

    def class_sizes(self) -> dict[int, int]:
        sizes = {c: 0 for c in range(1, self.k + 1)}
        for c in self.color_of.values():
            sizes[c] = sizes.get(c, 0) + 1
        return sizes


class ViolationKind(str, Enum):
    PROPERNESS = "PROPERNESS"
    EQUITY = "EQUITY"
    COUNT = "COUNT"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _from_partitions(parts: PartSizes, partitions: Iterable[QPartition]) -> ColorPlan:
    return ColorPlan(parts, tuple(p.terms() for p in partitions))


def initial_plan(report: ThresholdReport) -> ColorPlan:
    """Minimal (h-1)-partition of every part: a chi_star-coloring."""
    h1 = report.h - 1
    classes = tuple(
        (h1,) * a + (h1 + 1,) * b for a, b in report.initial_counts
    )
    plan = ColorPlan(report.parts, classes)
    assert plan.k == report.chi_star
    return plan


def _as_qpartitions(plan: ColorPlan, q: int) -> list[QPartition]:
    out = []
    for n, c in zip(plan.parts, plan.classes):
        b = sum(1 for s in c if s == q + 1)
        out.append(QPartition(n, q, len(c) - b, b))
    return out


def refine(plan: ColorPlan) -> ColorPlan:
    """Turn an equitable k-coloring plan into a (k+1)-coloring plan.

    Either some part's q-partition is not maximal and splits once, or every
    part is maximal; then the whole plan is read one level down and either a
    part splits there or the single part not divisible by q gains a class
    when demoted.  The smallest eligible part index is always the one
    changed.
    """
    parts = plan.parts
    if plan.k >= parts.total:
        raise PreconditionViolation(f"k={plan.k} already >= N={parts.total}")
    if plan.k != plan.num_classes:
        raise PreconditionViolation("plan has empty color classes")
    q = plan.level()
    current = _as_qpartitions(plan, q)

    for i, p in enumerate(current):
        if p.b >= p.q:
            current[i] = split_step(p)
            return _from_partitions(parts, current)

    # all maximal; q >= 2 here since q == 1 would mean k == N
    nondiv = [i for i, n in enumerate(parts) if n % q]
    if len(nondiv) >= 2:
        raise PreconditionViolation(
            f"parts {nondiv[:2]} both not divisible by level {q}; "
            "plan lies below the threshold"
        )
    lower = _as_qpartitions(plan, q - 1) if not nondiv else None
    if lower is not None:
        for i, p in enumerate(lower):
            if p.b >= p.q:
                lower[i] = split_step(p)
                return _from_partitions(parts, lower)
        raise PreconditionViolation(f"no part splits at level {q - 1}")

    (i,) = nondiv
    try:
        demoted = demote_level(parts[i], q)
    except NoPartition as exc:
        raise PreconditionViolation(f"plan lies below the threshold: {exc}") from None
    assert demoted.upper == current[i]
    assert demoted.delta == 1, demoted
    # parts divisible by q consist of q's only: read them as (q-1)-partitions
    new = [
        demoted.lower if j == i else QPartition(n, q - 1, 0, n // q)
        for j, n in enumerate(parts)
    ]
    return _from_partitions(parts, new)


def plan_for_k(parts: PartSizes | Iterable[int], k: int) -> ColorPlan | None:
    """Canonical equitable k-coloring plan, or None if none exists.

    For k < N an equitable k-coloring has r = N mod k classes of size
    q+1 and k-r of size q = N // k, so the level is forced.  Part i then
    needs a class count t_i in [ceil(n_i/(q+1)), n_i // q], and any choice
    with sum t_i = k gives a plan.  Counts start at their lower bounds and
    are raised in index order.
    """
    ps = as_parts(parts)
    if k < 1:
        raise InvalidArgument(f"k must be >= 1, got {k}")
    N = ps.total
    if k >= N:
        return ColorPlan(ps, tuple((1,) * n for n in ps), k)
    q = N // k
    lo = [-(-n // (q + 1)) for n in ps]
    hi = [n // q for n in ps]
    if any(a > b for a, b in zip(lo, hi)) or not sum(lo) <= k <= sum(hi):
        return None
    t = list(lo)
    spare = k - sum(lo)
    for i in range(len(t)):
        step = min(spare, hi[i] - lo[i])
        t[i] += step
        spare -= step
    classes = []
    for n, ti in zip(ps, t):
        b = n - q * ti
        classes.append((q,) * (ti - b) + (q + 1,) * b)
    return ColorPlan(ps, tuple(classes), k)


def realize(plan: ColorPlan) -> VertexColoring:
    color_of: dict[Vertex, int] = {}
    color = 0
    for i, c in enumerate(plan.classes):
        offset = 0
        for size in c:
            color += 1
            for v in range(offset, offset + size):
                color_of[(i, v)] = color
            offset += size
    return VertexColoring(plan.parts, color_of, plan.k)


def validate(coloring: VertexColoring) -> Verdict:
    """Check properness, equity and completeness of an explicit coloring."""
    parts, k = coloring.parts, coloring.k
    violations: list[Violation] = []

    expected = {(i, v) for i, n in enumerate(parts) for v in range(n)}
    given = set(coloring.color_of)
    if expected - given:
        violations.append(Violation(
            ViolationKind.COUNT, f"{len(expected - given)} vertices uncolored"))
    if given - expected:
        violations.append(Violation(
            ViolationKind.COUNT, f"unknown vertices {sorted(given - expected)[:5]}"))
    bad = sorted({c for c in coloring.color_of.values() if not 1 <= c <= k})
    if bad:
        violations.append(Violation(
            ViolationKind.COUNT, f"colors {bad[:5]} outside 1..{k}"))

    owner: dict[int, set[int]] = defaultdict(set)
    for (i, _), c in coloring.color_of.items():
        owner[c].add(i)
    for c in sorted(owner):
        if len(owner[c]) > 1:
            violations.append(Violation(
                ViolationKind.PROPERNESS,
                f"color {c} used in parts {sorted(owner[c])}"))

    N = len(expected)
    q, r = divmod(N, k)
    sizes = coloring.class_sizes()
    in_range = [sizes.get(c, 0) for c in range(1, k + 1)]
    big = sum(1 for s in in_range if s == q + 1)
    small = sum(1 for s in in_range if s == q)
    if big != r or small != k - r:
        violations.append(Violation(
            ViolationKind.EQUITY,
            f"want {r} classes of size {q + 1} and {k - r} of size {q}; "
            f"got sizes {sorted(in_range)}"))
    return Verdict(tuple(violations))
