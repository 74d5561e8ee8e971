"""Exact triangle enumeration by neighbor marking in non-increasing degree order."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graph import Graph, closed_neighborhood

TRIANGLE_SIZE = 3


@dataclass
class MotifSet:
    """Triangle occurrences touching a node set, as canonical sorted triples.

    ``motif_degree[v]`` counts, over the stored occurrences only, how many
    contain v.
    """

    occurrences: list[tuple[int, int, int]] = field(default_factory=list)
    motif_degree: dict[int, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.occurrences)

    def volume(self, nodes: Iterable[int]) -> int:
        """Sum of motif degrees over ``nodes``."""
        deg = self.motif_degree
        return sum(deg.get(v, 0) for v in nodes)


def _degree_order(adj: list[np.ndarray]) -> np.ndarray:
    deg = np.fromiter((len(a) for a in adj), count=len(adj), dtype=np.int64)
    return np.lexsort((np.arange(len(adj)), -deg))


def _scan_triangles(adj: list[np.ndarray], order: np.ndarray, collect: bool):
    """Enumerate each triangle of the adjacency structure exactly once.

    Processes pivots in ``order``; at each pivot only later-ordered neighbors
    are marked, and a scanned neighbor is unmarked before moving on, so a
    triangle is reported solely at its earliest-ordered corner.
    """
    k = len(adj)
    pos = np.empty(k, dtype=np.int64)
    pos[order] = np.arange(k)
    mark = np.zeros(k, dtype=bool)
    triangles: list[tuple[int, int, int]] = []
    count = 0

    for v in order.tolist():
        nb = adj[v]
        cand = nb[pos[nb] > pos[v]]
        if len(cand) < 2:
            continue
        mark[cand] = True
        for u in cand.tolist():
            ws = adj[u]
            hits = ws[mark[ws]]
            mark[u] = False
            if collect:
                for w in hits.tolist():
                    triangles.append((v, u, w))
            else:
                count += len(hits)
        mark[cand] = False

    return triangles if collect else count


def enumerate_triangles_touching(g: Graph, s: Iterable[int]) -> MotifSet:
    """All triangles of g with at least one endpoint in s.

    Runs on the subgraph induced by the closed neighborhood N[s], which
    contains every such triangle, then filters out triangles lying entirely
    outside s.  Motif degrees are tallied over the returned occurrences.
    """
    s_set = set(s)
    if not s_set:
        raise ValueError("node set must be nonempty")

    members = np.fromiter(sorted(closed_neighborhood(g, s_set)), dtype=np.int64)
    mask = np.zeros(g.num_nodes, dtype=bool)
    mask[members] = True

    adj: list[np.ndarray] = []
    for u in members.tolist():
        nb = g.neighbors(u)
        adj.append(np.searchsorted(members, nb[mask[nb]]))

    in_s = np.zeros(len(members), dtype=bool)
    in_s[np.searchsorted(members, np.fromiter(sorted(s_set), dtype=np.int64))] = True

    found = _scan_triangles(adj, _degree_order(adj), collect=True)

    motifs = MotifSet()
    degree = motifs.motif_degree
    for a, b, c in found:
        if not (in_s[a] or in_s[b] or in_s[c]):
            continue
        ga, gb, gc = int(members[a]), int(members[b]), int(members[c])
        triple = tuple(sorted((ga, gb, gc)))
        motifs.occurrences.append(triple)  # type: ignore[arg-type]
        for x in triple:
            degree[x] = degree.get(x, 0) + 1
    return motifs


def count_triangles_global(g: Graph) -> int:
    """Exact number of triangles in the whole graph."""
    adj = [g.neighbors(v) for v in range(g.num_nodes)]
    return _scan_triangles(adj, _degree_order(adj), collect=False)
