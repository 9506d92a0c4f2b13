"""Tensegrity graphs: node sets with a bar/cable/strut edge partition.

Nodes are labeled 0..n-1.  Constructions that add an apex node append it
as index n, so indices of existing nodes never shift.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "EdgeKind",
    "TensegrityGraph",
    "non_edges",
    "suspension",
    "tensor_product_graph",
    "min_degree",
    "adjacency_matrix",
    "complete_graph",
    "cycle_graph",
    "path_graph",
]


class EdgeKind(enum.Enum):
    BAR = "bar"
    CABLE = "cable"
    STRUT = "strut"


Edge = tuple[int, int, EdgeKind]


def _normalize_edge(spec, n: int) -> Edge:
    if len(spec) == 2:
        i, j = spec
        kind = EdgeKind.BAR
    elif len(spec) == 3:
        i, j, kind = spec
        if isinstance(kind, str):
            kind = EdgeKind(kind)
        elif not isinstance(kind, EdgeKind):
            raise ValueError(f"bad edge kind {kind!r}")
    else:
        raise ValueError(f"edge must be (i, j) or (i, j, kind), got {spec!r}")
    i, j = int(i), int(j)
    if i == j:
        raise ValueError(f"loop edge ({i}, {j}) is not allowed")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"edge ({i}, {j}) out of range for {n} nodes")
    if i > j:
        i, j = j, i
    return (i, j, kind)


class TensegrityGraph:
    """Immutable graph on n nodes whose edges are bars, cables or struts."""

    __slots__ = ("_n", "_edges", "_pairs")

    def __init__(self, n: int, edges: Iterable = ()):
        n = int(n)
        if n < 1:
            raise ValueError("a graph needs at least one node")
        normalized = sorted(
            (_normalize_edge(e, n) for e in edges), key=lambda e: (e[0], e[1])
        )
        pairs = [(i, j) for (i, j, _) in normalized]
        if len(set(pairs)) != len(pairs):
            dup = next(p for k, p in enumerate(pairs) if p in pairs[:k])
            raise ValueError(f"duplicate edge {dup}")
        self._n = n
        self._edges = tuple(normalized)
        self._pairs = frozenset(pairs)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edge_pairs(self) -> frozenset[tuple[int, int]]:
        return self._pairs

    def pairs_of_kind(self, kind: EdgeKind) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for (i, j, k) in self._edges if k is kind)

    @property
    def bars(self) -> tuple[tuple[int, int], ...]:
        return self.pairs_of_kind(EdgeKind.BAR)

    @property
    def cables(self) -> tuple[tuple[int, int], ...]:
        return self.pairs_of_kind(EdgeKind.CABLE)

    @property
    def struts(self) -> tuple[tuple[int, int], ...]:
        return self.pairs_of_kind(EdgeKind.STRUT)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._pairs

    def degrees(self) -> list[int]:
        deg = [0] * self._n
        for (i, j, _) in self._edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensegrityGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        b, c, s = len(self.bars), len(self.cables), len(self.struts)
        return f"TensegrityGraph(n={self._n}, bars={b}, cables={c}, struts={s})"


def non_edges(G: TensegrityGraph) -> list[tuple[int, int]]:
    """All unordered node pairs i < j that are not edges, lexicographically."""
    return [
        (i, j)
        for i in range(G.n)
        for j in range(i + 1, G.n)
        if (i, j) not in G.edge_pairs
    ]


def suspension(G: TensegrityGraph) -> TensegrityGraph:
    """Add an apex node (index n) joined to every node by a bar.

    Original bars stay bars; cables and struts are swapped.
    """
    swap = {
        EdgeKind.BAR: EdgeKind.BAR,
        EdgeKind.CABLE: EdgeKind.STRUT,
        EdgeKind.STRUT: EdgeKind.CABLE,
    }
    edges = [(i, j, swap[k]) for (i, j, k) in G.edges]
    edges += [(i, G.n, EdgeKind.BAR) for i in range(G.n)]
    return TensegrityGraph(G.n + 1, edges)


def tensor_product_graph(r: int, H: TensegrityGraph) -> TensegrityGraph:
    """Tensor (categorical) product of the complete graph on r nodes with H.

    Nodes are the pairs (i, h) with i in 0..r-1 and h a node of H, indexed
    as i * H.n + h.  Two nodes (i, h), (i', h') are adjacent exactly when
    i != i' and {h, h'} is an edge of H; all edges are bars.  H must be a
    bars-only graph.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if H.cables or H.struts:
        raise ValueError("H must contain only bars")
    m = H.n
    edges = []
    for (h, hp) in H.bars:
        for i in range(r):
            for ip in range(i + 1, r):
                edges.append((i * m + h, ip * m + hp))
                edges.append((i * m + hp, ip * m + h))
    return TensegrityGraph(r * m, edges)


def min_degree(G: TensegrityGraph) -> int:
    """Minimum over nodes of the number of incident edges (any kind)."""
    return min(G.degrees())


def adjacency_matrix(G: TensegrityGraph) -> np.ndarray:
    """Dense 0/1 adjacency matrix, ignoring edge kinds."""
    a = np.zeros((G.n, G.n))
    for (i, j, _) in G.edges:
        a[i, j] = a[j, i] = 1.0
    return a


def complete_graph(n: int, kind: EdgeKind = EdgeKind.BAR) -> TensegrityGraph:
    return TensegrityGraph(
        n, [(i, j, kind) for i in range(n) for j in range(i + 1, n)]
    )


def cycle_graph(n: int, kind: EdgeKind = EdgeKind.BAR) -> TensegrityGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 nodes")
    return TensegrityGraph(n, [(i, (i + 1) % n, kind) for i in range(n)])


def path_graph(n: int, kind: EdgeKind = EdgeKind.BAR) -> TensegrityGraph:
    return TensegrityGraph(n, [(i, i + 1, kind) for i in range(n - 1)])
