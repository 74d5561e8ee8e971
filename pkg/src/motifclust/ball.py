"""Fixed-depth BFS ball selection around a seed node."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

DEFAULT_MIN_BALL_SIZE = 100


@dataclass(frozen=True)
class Ball:
    """Nodes within ``depth_used`` BFS layers of the seed."""

    seed: int
    nodes: set[int]
    depth_used: int
    whole_component: bool


def bfs_ball(
    g: Graph,
    seed: int,
    layers: int,
    enforce_min_size: bool = False,
    min_size: int = DEFAULT_MIN_BALL_SIZE,
) -> Ball:
    """Collect the first ``layers`` BFS layers around ``seed``.

    With ``enforce_min_size``, whole extra layers are appended while the ball
    holds fewer than ``min_size`` nodes and the component is not exhausted.
    ``whole_component`` is set when the ball equals the seed's entire
    connected component.
    """
    if layers < 1:
        raise ValueError("layers must be >= 1")

    visited = np.zeros(g.num_nodes, dtype=bool)
    visited[seed] = True
    included = [seed]
    frontier = [seed]
    depth = 0
    whole = False

    while True:
        nxt: list[int] = []
        for u in frontier:
            for v in g.neighbors(u).tolist():
                if not visited[v]:
                    visited[v] = True
                    nxt.append(v)
        if not nxt:
            whole = True
            break
        if depth >= layers and not (enforce_min_size and len(included) < min_size):
            break
        included.extend(nxt)
        frontier = nxt
        depth += 1

    return Ball(seed=seed, nodes=set(included), depth_used=depth, whole_component=whole)
