"""Push-relabel maximum flow (FIFO selection, gap heuristic, global relabeling)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .flowmodel import FlowNetwork


@dataclass
class FlowState:
    """Terminated solver state: per-arc flow plus node labels and excess."""

    flow: list[int]
    label: list[int]
    excess: list[int]


def max_flow(net: FlowNetwork) -> tuple[int, FlowState]:
    """Maximum s-t flow value and the terminated solver state.

    Runs the preflow to completion (stranded excess drains back to the
    source), so the final flow is a genuine flow: conservation holds at every
    node besides s and t.
    """
    n = net.num_nodes
    s, t = net.source, net.sink
    adj = net.adj
    to = net.arc_to
    cap = net.arc_cap

    flow = [0] * len(to)
    label = [0] * n
    excess = [0] * n
    cur = [0] * n
    max_label = 2 * n
    count = [0] * (max_label + 2)

    label[s] = n
    count[0] = n - 1
    count[n] += 1

    active = [False] * n
    queue: deque[int] = deque()

    def enqueue(v: int) -> None:
        if not active[v] and excess[v] > 0 and v != s and v != t:
            active[v] = True
            queue.append(v)

    def push(u: int, i: int) -> None:
        v = to[i]
        amt = min(excess[u], cap[i] - flow[i])
        flow[i] += amt
        flow[i ^ 1] -= amt
        excess[u] -= amt
        excess[v] += amt
        enqueue(v)

    def global_relabel() -> None:
        """Recompute exact residual distances: to t below n, to s from n up."""
        fresh = [max_label] * n
        fresh[t] = 0
        bfs = deque([t])
        while bfs:
            u = bfs.popleft()
            du = fresh[u]
            for i in adj[u]:
                v = to[i]
                if fresh[v] == max_label and v != s and cap[i ^ 1] - flow[i ^ 1] > 0:
                    fresh[v] = du + 1
                    bfs.append(v)
        fresh[s] = n
        bfs = deque([s])
        while bfs:
            u = bfs.popleft()
            du = fresh[u]
            for i in adj[u]:
                v = to[i]
                if fresh[v] == max_label and cap[i ^ 1] - flow[i ^ 1] > 0:
                    fresh[v] = du + 1
                    bfs.append(v)
        for v in range(n):
            label[v] = fresh[v]
            cur[v] = 0
        for i in range(len(count)):
            count[i] = 0
        for v in range(n):
            count[label[v]] += 1

    def open_gap(level: int) -> None:
        """No node is left at ``level``: nodes above it cannot reach t anymore."""
        for v in range(n):
            if v != s and level < label[v] < n:
                count[label[v]] -= 1
                label[v] = n + 1
                count[n + 1] += 1
                cur[v] = 0
                enqueue(v)

    for i in list(adj[s]):
        amt = cap[i] - flow[i]
        if amt > 0:
            excess[s] += amt
            push(s, i)

    relabels = 0
    while queue:
        u = queue.popleft()
        active[u] = False
        while excess[u] > 0:
            if cur[u] < len(adj[u]):
                i = adj[u][cur[u]]
                if cap[i] - flow[i] > 0 and label[u] == label[to[i]] + 1:
                    push(u, i)
                else:
                    cur[u] += 1
                continue
            # out of admissible arcs: relabel
            old = label[u]
            best = max_label
            for i in adj[u]:
                if cap[i] - flow[i] > 0:
                    lv = label[to[i]]
                    if lv + 1 < best:
                        best = lv + 1
            count[old] -= 1
            label[u] = best
            count[best] += 1
            cur[u] = 0
            relabels += 1
            if count[old] == 0 and old < n:
                open_gap(old)
            if relabels >= n:
                relabels = 0
                global_relabel()
            if label[u] >= max_label:
                break

    return excess[t], FlowState(flow=flow, label=label, excess=excess)


def min_cut_sink_side(net: FlowNetwork, state: FlowState) -> set[int]:
    """Sink side of a minimum s-t cut: reverse BFS from t over residual arcs.

    This is the inclusion-minimal sink side among all minimum cuts.
    """
    adj = net.adj
    to = net.arc_to
    cap = net.arc_cap
    flow = state.flow

    seen = [False] * net.num_nodes
    seen[net.sink] = True
    bfs = deque([net.sink])
    while bfs:
        u = bfs.popleft()
        for i in adj[u]:
            v = to[i]
            if not seen[v] and cap[i ^ 1] - flow[i ^ 1] > 0:
                seen[v] = True
                bfs.append(v)
    return {v for v in range(net.num_nodes) if seen[v]}
