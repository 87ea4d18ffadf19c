"""Equitable chromatic threshold of complete multipartite graphs."""

from equipart.coloring import (
    ColorPlan,
    Verdict,
    VertexColoring,
    initial_plan,
    plan_for_k,
    realize,
    refine,
    validate,
)
from equipart.qpartition import (
    QPartition,
    classify,
    demote_level,
    exists_qpartition,
    maximal_qpartition,
    minimal_qpartition,
    split_step,
)
from equipart.threshold import (
    PartSizes,
    StopKind,
    StopReason,
    ThresholdReport,
    chi_star,
    chi_star_equal,
    compute_h_fast,
    compute_h_scan,
    s_star,
    s_star_all,
)

__all__ = [
    "ColorPlan", "Verdict", "VertexColoring", "initial_plan", "plan_for_k",
    "realize", "refine", "validate", "QPartition", "classify", "demote_level",
    "exists_qpartition", "maximal_qpartition", "minimal_qpartition", "split_step",
    "PartSizes", "StopKind", "StopReason", "ThresholdReport", "chi_star",
    "chi_star_equal", "compute_h_fast", "compute_h_scan", "s_star", "s_star_all",
]
