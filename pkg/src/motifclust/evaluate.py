"""Exact motif-conductance evaluation on the original graph.

A single evaluator, independent of the local model, so reported numbers are
comparable across algorithms and across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import Graph
from .hypergraph import UndefinedConductanceError
from .triangles import TRIANGLE_SIZE, enumerate_triangles_touching


@dataclass(frozen=True)
class Evaluation:
    cut_motifs: int
    volume_inside: int
    volume_total: int
    conductance: Fraction


def evaluate_exact(g: Graph, cluster: Iterable[int], total_triangles: int) -> Evaluation:
    """Motif conductance of the cluster in g: cut motifs over min-side motif volume.

    ``total_triangles`` must be the exact global triangle count (computed once
    per graph); the complement's volume is derived from it rather than
    enumerated.
    """
    c = set(cluster)
    if not c:
        raise ValueError("cluster is empty")
    motifs = enumerate_triangles_touching(g, c)
    cut = sum(1 for occ in motifs.occurrences if any(v not in c for v in occ))
    inside = motifs.volume(c)
    total = TRIANGLE_SIZE * total_triangles
    denom = min(inside, total - inside)
    if denom == 0:
        raise UndefinedConductanceError("cluster or complement has zero motif volume")
    return Evaluation(
        cut_motifs=cut,
        volume_inside=inside,
        volume_total=total,
        conductance=Fraction(cut, denom),
    )


def check_assumption_b(g: Graph, ball_nodes: Iterable[int], total_triangles: int) -> bool:
    """Whether the ball's motif volume is at most its complement's.

    Local and exact conductance agree for clusters inside the ball exactly
    when this holds.
    """
    s = set(ball_nodes)
    if not s:
        return True
    inside = enumerate_triangles_touching(g, s).volume(s)
    return inside <= TRIANGLE_SIZE * total_triangles - inside
