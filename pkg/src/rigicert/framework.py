"""Frameworks: a tensegrity graph with a position vector per node.

Positions live in R^d.  The Gram matrix of the positions, the configuration
matrices P and P_a = (P | e), and the rank-one constraint matrices built
from positions and edge directions are the raw material of every
certificate check in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, NamedTuple

import numpy as np

from .graph import TensegrityGraph, suspension
from .numkit import (
    DEFAULT_TOL,
    SymMatrix,
    Tolerance,
    svd_rank,
    sym_outer,
)

__all__ = [
    "Framework",
    "PartialMatrix",
    "SpanCheck",
    "gram",
    "configuration",
    "spherical_constraint_matrix",
    "euclidean_constraint_matrix",
    "extend_framework",
    "span_checks",
    "partial_matrix_of",
    "general_position_check",
]


class Framework:
    """A tensegrity graph plus one position vector in R^d per node.

    ``generic`` is a user declaration that the coordinates are algebraically
    independent; it is never inferred.  Positions that fail to span R^d are
    accepted here; certificates report the deficiency instead of raising.
    """

    __slots__ = ("_graph", "_d", "_positions", "_generic")

    def __init__(self, graph: TensegrityGraph, d: int, positions, generic: bool = False):
        d = int(d)
        if d < 1:
            raise ValueError("ambient dimension must be at least 1")
        P = np.array(positions, dtype=float)
        if P.ndim != 2 or P.shape != (graph.n, d):
            raise ValueError(
                f"positions must form a {graph.n} x {d} array, got shape {P.shape}"
            )
        if not np.all(np.isfinite(P)):
            raise ValueError("positions must be finite")
        P.setflags(write=False)
        self._graph = graph
        self._d = d
        self._positions = P
        self._generic = bool(generic)

    @property
    def graph(self) -> TensegrityGraph:
        return self._graph

    @property
    def n(self) -> int:
        return self._graph.n

    @property
    def d(self) -> int:
        return self._d

    @property
    def positions(self) -> np.ndarray:
        return self._positions

    @property
    def generic(self) -> bool:
        return self._generic

    def position(self, i: int) -> np.ndarray:
        return self._positions[i]

    def __repr__(self) -> str:
        return f"Framework(n={self.n}, d={self._d}, generic={self._generic})"


@dataclass(frozen=True)
class PartialMatrix:
    """Values on the diagonal and edge positions of a graph.

    Keys are (i, i) for nodes and (i, j) with i < j for edges; every node
    and edge has exactly one value.
    """

    graph: TensegrityGraph
    values: Mapping[tuple[int, int], float]

    def __post_init__(self):
        expected = {(i, i) for i in range(self.graph.n)} | set(self.graph.edge_pairs)
        if set(self.values.keys()) != expected:
            raise ValueError("values must cover exactly the diagonal and edge pairs")


class SpanCheck(NamedTuple):
    linear_span_full: bool
    affine_span_full: bool


def gram(F: Framework) -> SymMatrix:
    """Gram matrix of the positions; its rank is the dimension they span."""
    P = F.positions
    return SymMatrix(P @ P.T)


def configuration(F: Framework) -> tuple[np.ndarray, np.ndarray]:
    """Configuration matrices (P, P_a): rows are positions, P_a appends ones."""
    P = F.positions.copy()
    Pa = np.hstack([P, np.ones((F.n, 1))])
    return P, Pa


def spherical_constraint_matrix(F: Framework, i: int, j: int) -> SymMatrix:
    """Symmetrized outer product (p_i p_j^T + p_j p_i^T) / 2 in S^d."""
    if not (0 <= i < F.n and 0 <= j < F.n):
        raise ValueError(f"node index out of range: ({i}, {j})")
    return sym_outer(F.position(i), F.position(j) if j != i else None)


def euclidean_constraint_matrix(F: Framework, i: int, j: int) -> SymMatrix:
    """Rank-one matrix (p_i - p_j)(p_i - p_j)^T of the edge direction."""
    if i == j:
        raise ValueError("edge direction requires two distinct nodes")
    if not (0 <= i < F.n and 0 <= j < F.n):
        raise ValueError(f"node index out of range: ({i}, {j})")
    diff = F.position(i) - F.position(j)
    return sym_outer(diff)


def extend_framework(F: Framework) -> Framework:
    """Suspension framework: apex node appended at the origin."""
    P = np.vstack([F.positions, np.zeros((1, F.d))])
    return Framework(suspension(F.graph), F.d, P, generic=F.generic)


def span_checks(F: Framework, tol: Tolerance = DEFAULT_TOL) -> SpanCheck:
    """Whether the positions span R^d linearly, and affinely (rank of P_a)."""
    P, Pa = configuration(F)
    return SpanCheck(
        linear_span_full=svd_rank(P, tol) == F.d,
        affine_span_full=svd_rank(Pa, tol) == F.d + 1,
    )


def partial_matrix_of(F: Framework) -> PartialMatrix:
    """Read the Gram matrix off at the diagonal and edge positions."""
    X = gram(F).array
    values = {(i, i): float(X[i, i]) for i in range(F.n)}
    for (i, j) in F.graph.edge_pairs:
        values[(i, j)] = float(X[i, j])
    return PartialMatrix(graph=F.graph, values=values)


def general_position_check(F: Framework, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Heuristic spot check: every d+1 positions are affinely independent.

    This is a necessary condition for genericity, not a proof; the
    ``generic`` flag on a framework remains a user declaration.
    """
    _, Pa = configuration(F)
    k = F.d + 1
    if F.n < k:
        return False
    for subset in combinations(range(F.n), k):
        if svd_rank(Pa[list(subset)], tol) < k:
            return False
    return True
