"""Local hypergraph model: ball nodes plus one contracted complement node.

Each motif occurrence becomes a weighted net over the ball nodes it touches;
endpoints outside the ball collapse into the single complement node.  Cut and
volume queries on this model give the cluster's motif conductance without
touching the rest of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable

from .triangles import MotifSet


class UndefinedConductanceError(ZeroDivisionError):
    """Conductance requested for a cluster with zero volume."""


@dataclass
class HypergraphModel:
    """Weighted-net model over local indices 0..k-1; index k is the complement node."""

    nodes: list[int]  # ball nodes (graph ids), sorted; local index = position
    index: dict[int, int]  # graph id -> local index
    net_pins: list[tuple[int, ...]]  # sorted local indices, possibly including r
    net_weights: list[int]
    weighted_degree: list[int]  # per local node; entry k is the complement node's
    motif_size: int

    @property
    def r(self) -> int:
        """Local index of the contracted complement node."""
        return len(self.nodes)

    @property
    def total_weighted_volume(self) -> int:
        return sum(self.weighted_degree[: self.r])

    def to_local(self, graph_ids: Iterable[int]) -> set[int]:
        return {self.index[v] for v in graph_ids}

    def to_graph(self, locals_: Iterable[int]) -> set[int]:
        return {self.nodes[i] for i in locals_}


def build_model(ball_nodes: Iterable[int], motifs: MotifSet, motif_size: int = 3) -> HypergraphModel:
    """Contract everything outside the ball into one node and merge parallel nets.

    Net weights count the motif occurrences each merged net represents; node
    weights are not modeled (they are unit everywhere).
    """
    nodes = sorted(ball_nodes)
    index = {v: i for i, v in enumerate(nodes)}
    r = len(nodes)

    merged: dict[tuple[int, ...], int] = {}
    for occ in motifs.occurrences:
        inside = sorted(index[v] for v in occ if v in index)
        if not inside:
            raise ValueError(f"motif occurrence {occ} has no endpoint in the ball")
        pins = tuple(inside) if len(inside) == len(occ) else tuple(inside) + (r,)
        merged[pins] = merged.get(pins, 0) + 1

    net_pins = sorted(merged)
    net_weights = [merged[p] for p in net_pins]

    weighted_degree = [0] * (r + 1)
    for pins, w in zip(net_pins, net_weights):
        for p in pins:
            weighted_degree[p] += w

    return HypergraphModel(
        nodes=nodes,
        index=index,
        net_pins=net_pins,
        net_weights=net_weights,
        weighted_degree=weighted_degree,
        motif_size=motif_size,
    )


def cut_net(h: HypergraphModel, cluster: set[int]) -> int:
    """Total weight of nets with pins on both sides of the cluster boundary.

    ``cluster`` holds local indices of ball nodes; the complement node is
    always outside it.
    """
    total = 0
    for pins, w in zip(h.net_pins, h.net_weights):
        has_in = has_out = False
        for p in pins:
            if p in cluster:
                has_in = True
            else:
                has_out = True
        if has_in and has_out:
            total += w
    return total


def weighted_volume(h: HypergraphModel, cluster: Iterable[int]) -> int:
    deg = h.weighted_degree
    return sum(deg[v] for v in cluster)


def local_conductance(h: HypergraphModel, cluster: set[int]) -> Fraction:
    """cut / weighted volume of the cluster, as an exact ratio."""
    vol = weighted_volume(h, cluster)
    if vol == 0:
        raise UndefinedConductanceError("cluster has zero weighted volume")
    return Fraction(cut_net(h, cluster), vol)


def dump_model(h: HypergraphModel, stream: IO[str]) -> None:
    """Debug dump, one net per line: "w: pin pin ...", complement node as 'r'."""
    for pins, w in zip(h.net_pins, h.net_weights):
        rendered = " ".join("r" if p == h.r else str(h.nodes[p]) for p in pins)
        stream.write(f"{w}: {rendered}\n")
