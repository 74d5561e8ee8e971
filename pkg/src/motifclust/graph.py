"""Immutable undirected simple graph in CSR form, loaded from edge-list text."""

from __future__ import annotations

import gzip
import io
from typing import IO, Iterable, Iterator

import numpy as np

COMMENT_PREFIXES = ("#", "%")


class GraphParseError(ValueError):
    """Raised when an edge-list line cannot be parsed."""


class Graph:
    """Undirected simple graph with sorted CSR adjacency.

    Node ids are dense (0..n-1), assigned by first appearance in the input.
    The original input ids are kept in ``original_ids`` so results can be
    reported in the input's id space.
    """

    __slots__ = ("num_nodes", "num_edges", "offsets", "targets", "original_ids", "_dense_of")

    def __init__(self, offsets: np.ndarray, targets: np.ndarray, original_ids: np.ndarray):
        self.num_nodes = int(len(offsets) - 1)
        self.num_edges = int(len(targets) // 2)
        self.offsets = offsets
        self.targets = targets
        self.original_ids = original_ids
        for arr in (self.offsets, self.targets, self.original_ids):
            arr.setflags(write=False)
        self._dense_of: dict[int, int] | None = None

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of v (read-only view)."""
        return self.targets[self.offsets[v] : self.offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        i = np.searchsorted(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def dense_id(self, original_id: int) -> int:
        """Map an original input id to its dense id; KeyError if unknown."""
        if self._dense_of is None:
            self._dense_of = {int(o): i for i, o in enumerate(self.original_ids)}
        return self._dense_of[original_id]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All undirected edges as (u, v) with u < v, in dense-id order."""
        for u in range(self.num_nodes):
            for v in self.neighbors(u):
                if v > u:
                    yield u, int(v)


def load_edge_list(source: Iterable[str]) -> Graph:
    """Build a Graph from whitespace-separated edge-list lines.

    Lines starting with '#' or '%' are comments.  Ids are remapped densely
    in first-appearance order; self-loops and duplicate edges are dropped.

    Raises:
        GraphParseError: a non-comment line does not hold two integer ids.
        ValueError: the input contains no nodes.
    """
    dense: dict[int, int] = {}
    original: list[int] = []
    us: list[int] = []
    vs: list[int] = []

    def dense_of(orig: int) -> int:
        d = dense.get(orig)
        if d is None:
            d = len(dense)
            dense[orig] = d
            original.append(orig)
        return d

    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected two node ids, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer token in {line!r}") from None
        da, db = dense_of(a), dense_of(b)
        if da == db:
            continue
        us.append(da)
        vs.append(db)

    n = len(dense)
    if n == 0:
        raise ValueError("empty graph: input contains no nodes")

    if us:
        u_arr = np.asarray(us, dtype=np.int64)
        v_arr = np.asarray(vs, dtype=np.int64)
        lo = np.minimum(u_arr, v_arr)
        hi = np.maximum(u_arr, v_arr)
        keys = np.unique(lo * n + hi)
        lo = keys // n
        hi = keys % n
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        targets = dst[order]
        counts = np.bincount(src, minlength=n)
    else:
        targets = np.empty(0, dtype=np.int64)
        counts = np.zeros(n, dtype=np.int64)

    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    return Graph(offsets, targets, np.asarray(original, dtype=np.int64))


def load_graph(path: str) -> Graph:
    """Load a graph from an edge-list file; '.gz' paths are decompressed."""
    if path.endswith(".gz"):
        with gzip.open(path, "rt") as fh:
            return load_edge_list(fh)
    with open(path, "r") as fh:
        return load_edge_list(fh)


def dump_edge_list(g: Graph, stream: IO[str]) -> None:
    """Write the graph as a sorted edge list in original ids (round-trip format)."""
    orig = g.original_ids
    pairs = []
    for u, v in g.edges():
        a, b = int(orig[u]), int(orig[v])
        pairs.append((a, b) if a < b else (b, a))
    pairs.sort()
    for a, b in pairs:
        stream.write(f"{a} {b}\n")


def dumps_edge_list(g: Graph) -> str:
    buf = io.StringIO()
    dump_edge_list(g, buf)
    return buf.getvalue()


def closed_neighborhood(g: Graph, nodes: Iterable[int]) -> set[int]:
    """N[nodes]: the given nodes plus every neighbor of one of them."""
    out: set[int] = set()
    for v in nodes:
        out.add(v)
        out.update(g.neighbors(v).tolist())
    return out
