"""Local clustering driver: repeated balls, each refined by max-flow improvement.

Each repetition selects a BFS ball, models its motif structure as a local
hypergraph, and then repeatedly builds the improvement network and solves it;
every round either certifies the current cluster optimal among its seed-bearing
subsets or strictly shrinks it with strictly smaller cut-to-volume ratio.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .ball import DEFAULT_MIN_BALL_SIZE, Ball, bfs_ball
from .flowmodel import Expansion, build_flow_model
from .graph import Graph
from .hypergraph import HypergraphModel, build_model, cut_net, local_conductance, weighted_volume
from .maxflow import max_flow, min_cut_sink_side
from .triangles import enumerate_triangles_touching

STATUS_OK = "ok"
STATUS_WHOLE_COMPONENT = "whole-component-zero"
STATUS_NO_MOTIFS = "no-motifs"


@dataclass(frozen=True)
class ClusterParams:
    alpha: int = 3
    layers: tuple[int, ...] = (1, 2, 3)
    expansion: Expansion = Expansion.CLIQUE
    min_ball: int = DEFAULT_MIN_BALL_SIZE

    def __post_init__(self) -> None:
        if self.alpha < 1:
            raise ValueError("alpha must be >= 1")
        if len(self.layers) != self.alpha:
            raise ValueError("layers schedule length must equal alpha")


@dataclass(frozen=True)
class TraceEntry:
    cluster: frozenset[int]  # dense graph ids
    conductance: Fraction
    flow_value: int | None  # None for the initial cluster


@dataclass
class ClusterTrace:
    """Improvement sequence for one repetition (one ball)."""

    layers: int
    ball_size: int
    ball_motif_volume: int
    entries: list[TraceEntry] = field(default_factory=list)


@dataclass
class ClusteringResult:
    status: str
    seed: int  # dense id
    cluster: set[int]  # dense ids; empty only for no-motifs
    local_conductance: Fraction | None
    timings: dict[str, float]
    traces: list[ClusterTrace]
    exact_conductance: Fraction | None = None

    @property
    def size(self) -> int:
        return len(self.cluster)


def _flow_step(
    h: HypergraphModel, c0: set[int], seed: int, kind: Expansion
) -> tuple[set[int] | None, int | None]:
    """One improvement round; returns (smaller cluster or None, flow value)."""
    if cut_net(h, c0) == 0:
        return None, None
    net = build_flow_model(h, c0, seed, kind)
    value, state = max_flow(net)
    if value >= net.trivial_cut_weight:
        return None, value
    sink_side = min_cut_sink_side(net, state)
    improved = net.cluster_locals(sink_side)
    return improved, value


def improve_once(
    h: HypergraphModel, c0: set[int], seed: int, kind: Expansion = Expansion.CLIQUE
) -> set[int] | None:
    """Strictly better sub-cluster containing the seed, or None at a local optimum.

    ``c0`` and the result are sets of hypergraph local indices.
    """
    return _flow_step(h, c0, seed, kind)[0]


def local_cluster(g: Graph, seed: int, params: ClusterParams | None = None) -> ClusteringResult:
    """Best local cluster around ``seed`` over the repetition schedule."""
    params = params or ClusterParams()
    timings = {"ball": 0.0, "enum": 0.0, "model": 0.0, "flow": 0.0}
    traces: list[ClusterTrace] = []
    best_cluster: set[int] | None = None
    best_value: Fraction | None = None
    status = STATUS_NO_MOTIFS

    t_start = time.perf_counter()
    for rep, layers in enumerate(params.layers):
        last_rep = rep == params.alpha - 1
        t0 = time.perf_counter()
        ball = bfs_ball(g, seed, layers, enforce_min_size=last_rep, min_size=params.min_ball)
        t1 = time.perf_counter()
        motifs = enumerate_triangles_touching(g, ball.nodes)
        t2 = time.perf_counter()
        timings["ball"] += t1 - t0
        timings["enum"] += t2 - t1

        if not motifs.occurrences:
            if ball.whole_component:
                break  # the whole component is motif-free; more layers cannot help
            continue

        if ball.whole_component:
            # No motif crosses the ball boundary: conductance 0, stop everything.
            trace = ClusterTrace(layers=layers, ball_size=len(ball.nodes), ball_motif_volume=motifs.volume(ball.nodes))
            trace.entries.append(TraceEntry(frozenset(ball.nodes), Fraction(0), None))
            traces.append(trace)
            timings["total"] = time.perf_counter() - t_start
            return ClusteringResult(
                status=STATUS_WHOLE_COMPONENT,
                seed=seed,
                cluster=set(ball.nodes),
                local_conductance=Fraction(0),
                timings=timings,
                traces=traces,
            )

        t2 = time.perf_counter()
        h = build_model(ball.nodes, motifs)
        seed_local = h.index[seed]
        # Nodes in no net cannot change any cut or volume; drop them up front.
        cluster = {v for v in range(len(h.nodes)) if h.weighted_degree[v] > 0}
        cluster.add(seed_local)
        t3 = time.perf_counter()
        timings["model"] += t3 - t2

        trace = ClusterTrace(layers=layers, ball_size=len(ball.nodes), ball_motif_volume=motifs.volume(ball.nodes))
        trace.entries.append(TraceEntry(frozenset(h.to_graph(cluster)), local_conductance(h, cluster), None))

        t4 = time.perf_counter()
        while True:
            improved, flow_value = _flow_step(h, cluster, seed_local, params.expansion)
            if improved is None:
                break
            cluster = improved
            trace.entries.append(
                TraceEntry(frozenset(h.to_graph(cluster)), local_conductance(h, cluster), flow_value)
            )
        timings["flow"] += time.perf_counter() - t4
        traces.append(trace)

        value = trace.entries[-1].conductance
        if best_value is None or value < best_value:
            best_value = value
            best_cluster = h.to_graph(cluster)
        status = STATUS_OK

    timings["total"] = time.perf_counter() - t_start
    if best_cluster is None:
        return ClusteringResult(
            status=STATUS_NO_MOTIFS,
            seed=seed,
            cluster=set(),
            local_conductance=None,
            timings=timings,
            traces=traces,
        )
    return ClusteringResult(
        status=status,
        seed=seed,
        cluster=best_cluster,
        local_conductance=best_value,
        timings=timings,
        traces=traces,
    )
