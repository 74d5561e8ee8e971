"""Directed capacitated network built from the hypergraph model and a cluster.

The network is wired so that an s-t cut cheaper than the trivial cut
({s}, rest) certifies a strict sub-cluster (containing the seed) with smaller
cut-to-volume ratio.  Everything outside the cluster is contracted into the
source; each node pays a sink arc priced by the cluster's current cut; the
seed's sink arc is infinite so it can never leave the cluster.

All finite capacities carry a uniform integer scale of (motif size - 1) so
the clique expansion's per-edge division stays integral; positive uniform
scaling changes no min-cut comparison.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import IO, Iterable

from .hypergraph import HypergraphModel, cut_net, weighted_volume


class UnsupportedExpansionError(ValueError):
    """Clique/star expansion requested for a net with more than 3 pins."""


class Expansion(Enum):
    CLIQUE = "clique"
    STAR = "star"
    LAWLER = "lawler"


class FlowNetwork:
    """Capacitated directed graph with paired arcs (arc i and i^1 are reverses)."""

    def __init__(self, num_nodes: int, source: int, sink: int):
        self.num_nodes = num_nodes
        self.source = source
        self.sink = sink
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]
        self.arc_to: list[int] = []
        self.arc_cap: list[int] = []
        # metadata filled by build_flow_model
        self.node_origin: list[tuple] = []
        self.seed_node: int | None = None
        self.scale: int | None = None
        self.infinite: int | None = None
        self.trivial_cut_weight: int | None = None

    def add_arc(self, u: int, v: int, cap: int, rev_cap: int = 0) -> int:
        """Add the arc pair u->v / v->u; returns the forward arc index."""
        i = len(self.arc_to)
        self.arc_to.append(v)
        self.arc_cap.append(cap)
        self.adj[u].append(i)
        self.arc_to.append(u)
        self.arc_cap.append(rev_cap)
        self.adj[v].append(i + 1)
        return i

    @classmethod
    def from_arcs(
        cls, num_nodes: int, arcs: Iterable[tuple[int, int, int]], source: int, sink: int
    ) -> "FlowNetwork":
        """Build a plain network from (u, v, cap) triples; parallel arcs are summed."""
        caps: dict[tuple[int, int], int] = {}
        for u, v, cap in arcs:
            if u == v or cap == 0:
                continue
            caps[(u, v)] = caps.get((u, v), 0) + cap
        net = cls(num_nodes, source, sink)
        _materialize(net, caps)
        return net

    def cluster_locals(self, node_ids: Iterable[int]) -> set[int]:
        """Hypergraph local indices of the cluster nodes among ``node_ids``."""
        out = set()
        for nid in node_ids:
            origin = self.node_origin[nid]
            if origin and origin[0] == "cluster":
                out.add(origin[1])
        return out


def _materialize(net: FlowNetwork, caps: dict[tuple[int, int], int]) -> None:
    pairs = sorted({(min(u, v), max(u, v)) for (u, v) in caps})
    for a, b in pairs:
        net.add_arc(a, b, caps.get((a, b), 0), caps.get((b, a), 0))


def build_flow_model(
    h: HypergraphModel, c0: set[int], seed: int, kind: Expansion = Expansion.CLIQUE
) -> FlowNetwork:
    """Construct the improvement network for cluster ``c0`` (local indices).

    Requires seed in c0, positive weighted volume, and a positive cut (a
    zero-cut cluster is already optimal and has no meaningful network).
    """
    if seed not in c0:
        raise ValueError("seed must belong to the cluster")
    dw_c0 = weighted_volume(h, c0)
    if dw_c0 <= 0:
        raise ValueError("cluster has zero weighted volume")
    cut_c0 = cut_net(h, c0)
    if cut_c0 <= 0:
        raise ValueError("cluster cut is zero; nothing to improve")

    scale = h.motif_size - 1
    cluster = sorted(c0)
    node_of = {loc: i + 1 for i, loc in enumerate(cluster)}
    origins: list[tuple] = [("source",)] + [("cluster", loc) for loc in cluster]

    caps: dict[tuple[int, int], int] = {}
    inf_arcs: list[tuple[int, int]] = []

    def add_cap(u: int, v: int, cap: int) -> None:
        caps[(u, v)] = caps.get((u, v), 0) + cap

    if kind is Expansion.CLIQUE:
        for pins, w in zip(h.net_pins, h.net_weights):
            if len(pins) > 3:
                raise UnsupportedExpansionError(f"clique expansion needs nets of <= 3 pins, got {len(pins)}")
            unit, rem = divmod(scale * w * dw_c0, len(pins) - 1)
            assert rem == 0
            for p, q in combinations(pins, 2):
                a = node_of.get(p, 0)
                b = node_of.get(q, 0)
                if a == 0 and b == 0:
                    continue
                if a == 0:
                    add_cap(0, b, unit)
                elif b == 0:
                    add_cap(0, a, unit)
                else:
                    add_cap(a, b, unit)
                    add_cap(b, a, unit)
    elif kind is Expansion.STAR:
        for net_id, (pins, w) in enumerate(zip(h.net_pins, h.net_weights)):
            if len(pins) > 3:
                raise UnsupportedExpansionError(f"star expansion needs nets of <= 3 pins, got {len(pins)}")
            if not any(p in c0 for p in pins):
                continue
            aux = len(origins)
            origins.append(("aux", net_id, "star"))
            unit = scale * w * dw_c0
            for p in pins:
                a = node_of.get(p, 0)
                if a == 0:
                    add_cap(0, aux, unit)
                else:
                    add_cap(a, aux, unit)
                    add_cap(aux, a, unit)
    elif kind is Expansion.LAWLER:
        for net_id, (pins, w) in enumerate(zip(h.net_pins, h.net_weights)):
            inside = [p for p in pins if p in c0]
            if not inside:
                continue
            unit = scale * w * dw_c0
            if len(inside) == len(pins):
                w1 = len(origins)
                origins.append(("aux", net_id, "w1"))
                w2 = len(origins)
                origins.append(("aux", net_id, "w2"))
                add_cap(w1, w2, unit)
                for p in pins:
                    inf_arcs.append((node_of[p], w1))
                    inf_arcs.append((w2, node_of[p]))
            else:
                w2 = len(origins)
                origins.append(("aux", net_id, "w2"))
                add_cap(0, w2, unit)
                for p in inside:
                    inf_arcs.append((w2, node_of[p]))
    else:
        raise ValueError(f"unknown expansion kind {kind!r}")

    t = len(origins)
    origins.append(("sink",))
    for loc in cluster:
        if loc == seed:
            continue
        cap = scale * cut_c0 * h.weighted_degree[loc]
        if cap:
            add_cap(node_of[loc], t, cap)
    inf_arcs.append((node_of[seed], t))

    sentinel = sum(caps.values()) + 1
    for u, v in inf_arcs:
        assert (u, v) not in caps
        caps[(u, v)] = sentinel

    net = FlowNetwork(len(origins), source=0, sink=t)
    _materialize(net, caps)
    net.node_origin = origins
    net.seed_node = node_of[seed]
    net.scale = scale
    net.infinite = sentinel
    net.trivial_cut_weight = scale * cut_c0 * dw_c0
    return net


def dump_dimacs(net: FlowNetwork, stream: IO[str]) -> None:
    """Write the network in DIMACS max-flow format (1-based node ids)."""
    arcs = [(net.arc_to[i ^ 1], net.arc_to[i], net.arc_cap[i]) for i in range(len(net.arc_to))]
    arcs = [(u, v, c) for u, v, c in arcs if c > 0]
    stream.write(f"p max {net.num_nodes} {len(arcs)}\n")
    stream.write(f"n {net.source + 1} s\n")
    stream.write(f"n {net.sink + 1} t\n")
    for u, v, c in arcs:
        stream.write(f"a {u + 1} {v + 1} {c}\n")
