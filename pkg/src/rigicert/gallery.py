"""Executable fixture gallery: classic frameworks with closed-form stresses.

Each fixture bundles a framework, its certificate stress matrix (when one
exists in closed form) and a map of machine-checkable expected facts.  The
suite test is exactly "all expected facts hold at the default tolerance".

All indices here are 0-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .certify import (
    ActivePairs,
    c5_angle_completion,
    certify_universal_completability,
    certify_universal_rigidity,
    gd_lower_bound,
    gram_nondegeneracy_check,
    nu_lower_bound,
)
from .framework import Framework
from .graph import TensegrityGraph, adjacency_matrix, cycle_graph
from .numkit import (
    DEFAULT_TOL,
    SymMatrix,
    Tolerance,
    rank_corank,
    sym_eigen,
)
from .stress import equilibrium_stress_space, spherical_stress_space

__all__ = [
    "Fixture",
    "FactCheck",
    "octahedron_fixture",
    "fr_fixture",
    "gr_fixture",
    "tensor_fixture",
    "simplex_vectors",
    "c5_fixtures",
    "remark41_fixture",
    "all_fixtures",
    "validate_fixture",
]


@dataclass(frozen=True)
class Fixture:
    """A named framework with optional stress and expected facts.

    ``metadata`` carries construction by-products needed to check some
    facts (for instance the triangle list of the triangulation family).
    """

    name: str
    framework: Framework
    stress: SymMatrix | None
    expected: Mapping[str, object]
    metadata: Mapping[str, object] = field(default_factory=dict)
    description: str = ""


@dataclass(frozen=True)
class FactCheck:
    fact: str
    passed: bool
    detail: str


def octahedron_fixture() -> Fixture:
    """Octahedral graph K_{2,2,2} with a rank-one certificate stress.

    Nodes 0..5 with non-adjacent pairs {0,3}, {1,4}, {2,5}; positions
    e1, e2, e1+e2, e3, e4, e5 in R^5; stress v v^T with v = (1,1,-1,0,0,0).
    """
    n = 6
    parts = {(0, 3), (1, 4), (2, 5)}
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in parts
    ]
    G = TensegrityGraph(n, edges)
    P = np.array(
        [
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [1, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
        ],
        dtype=float,
    )
    v = np.array([1.0, 1.0, -1.0, 0.0, 0.0, 0.0])
    Z = SymMatrix(np.outer(v, v))
    return Fixture(
        name="octahedron",
        framework=Framework(G, 5, P),
        stress=Z,
        expected={
            "n": 6,
            "d": 5,
            "stress_corank": 5,
            "completability_overall": True,
            "gram_span_rank": 15,
            "gd_lower_bound": 5,
            "nu_lower_bound": 5,
        },
        description="complete tripartite framework with a unique psd completion",
    )


def fr_fixture(r: int) -> Fixture:
    """Clique-gadget family: a central r-clique plus a triangle per pair.

    Nodes are r hub nodes (indices 0..r-1) and one pair node per hub pair
    (appended in lexicographic order).  Hub i sits at e_i, pair node {i,j}
    at e_i + e_j, in R^r.  The stress is a sum of rank-one terms
    u u^T with u = e_hub_i + e_hub_j - e_pair_ij; its corank is r.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    pair_index = {}
    k = r
    for i in range(r):
        for j in range(i + 1, r):
            pair_index[(i, j)] = k
            k += 1
    n = k
    edges = set()
    for i in range(r):
        for j in range(i + 1, r):
            p = pair_index[(i, j)]
            edges |= {(i, j), (i, p), (j, p)}
    G = TensegrityGraph(n, sorted(edges))
    P = np.zeros((n, r))
    for i in range(r):
        P[i, i] = 1.0
    for (i, j), p in pair_index.items():
        P[p, i] = 1.0
        P[p, j] = 1.0
    Z = np.zeros((n, n))
    for (i, j), p in pair_index.items():
        u = np.zeros(n)
        u[i] = u[j] = 1.0
        u[p] = -1.0
        Z += np.outer(u, u)
    return Fixture(
        name=f"fr-{r}",
        framework=Framework(G, r, P),
        stress=SymMatrix(Z),
        expected={
            "n": r + r * (r - 1) // 2,
            "d": r,
            "stress_corank": r,
            "completability_overall": True,
            "gd_lower_bound": r,
            "nu_lower_bound": r,
        },
        description=f"central {r}-clique with one triangle gadget per pair",
    )


def gr_fixture(r: int) -> Fixture:
    """Triangulated-triangle family with the upward-triangle stress.

    A triangular grid with r nodes on the bottom level and one at the top.
    Level-1 node i sits at e_i; each higher node is the sum of the two
    nodes below it.  One rank-one stress term per upward triangle
    {(i,l), (i+1,l), (i,l+1)} (+1, +1, -1 pattern); every edge belongs to
    exactly one upward triangle and the total stress has corank r.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    index = {}
    k = 0
    for level in range(1, r + 1):
        for i in range(1, r - level + 2):
            index[(i, level)] = k
            k += 1
    n = k
    P = np.zeros((n, r))
    for i in range(1, r + 1):
        P[index[(i, 1)], i - 1] = 1.0
    for level in range(2, r + 1):
        for i in range(1, r - level + 2):
            P[index[(i, level)]] = P[index[(i, level - 1)]] + P[index[(i + 1, level - 1)]]
    edges = set()
    triangles = []
    for level in range(1, r):
        for i in range(1, r - level + 1):
            a = index[(i, level)]
            b = index[(i + 1, level)]
            c = index[(i, level + 1)]
            triangles.append((a, b, c))
            for (x, y) in ((a, b), (a, c), (b, c)):
                edges.add((min(x, y), max(x, y)))
    G = TensegrityGraph(n, sorted(edges))
    Z = np.zeros((n, n))
    for (a, b, c) in triangles:
        u = np.zeros(n)
        u[a] = u[b] = 1.0
        u[c] = -1.0
        Z += np.outer(u, u)
    count = r * (r + 1) // 2
    return Fixture(
        name=f"gr-{r}",
        framework=Framework(G, r, P),
        stress=SymMatrix(Z),
        expected={
            "n": count,
            "d": r,
            "stress_corank": r,
            "completability_overall": True,
            "black_triangle_count": count - r,
            "edges_covered_once": True,
        },
        metadata={"black_triangles": tuple(triangles)},
        description=f"edge graph of a triangulated triangle with {r} base nodes",
    )


def simplex_vectors(r: int) -> np.ndarray:
    """Vertices of a regular simplex in R^{r-1}, centered at the origin.

    Rows sum to zero and span R^{r-1}; built from the orthonormal rows of
    the order-r Helmert matrix.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    H = np.zeros((r - 1, r))
    for k in range(1, r):
        H[k - 1, :k] = 1.0
        H[k - 1, k] = -float(k)
        H[k - 1] /= math.sqrt(k * (k + 1))
    return H.T.copy()


def tensor_fixture(
    r: int,
    H: TensegrityGraph,
    w: np.ndarray | None = None,
    tol: Tolerance = DEFAULT_TOL,
) -> Fixture:
    """Tensor product of a complete graph with a regular graph.

    H must be k-regular with every non-largest adjacency eigenvalue
    strictly below k/(r-1) in magnitude; otherwise the construction is
    rejected, naming the offending eigenvalue.  Node (i, h) is placed at
    w_i in R^{r-1} (default: regular simplex vertices); the stress is
    I + A/k on the product graph and has corank r - 1.
    """
    from .graph import tensor_product_graph

    if r < 2:
        raise ValueError("r must be at least 2")
    degrees = H.degrees()
    if len(set(degrees)) != 1:
        raise ValueError("H must be regular")
    k = degrees[0]
    if k == 0:
        raise ValueError("H must have at least one edge")
    lam = sym_eigen(adjacency_matrix(H)).eigenvalues
    lam_desc = lam[::-1]
    bound = k / (r - 1)
    margin = tol.rel_eig * max(1.0, bound)
    worst = float(np.abs(lam_desc[1:]).max())
    if worst >= bound - margin:
        raise ValueError(
            f"adjacency eigenvalue {worst:.12g} is not strictly below "
            f"k/(r-1) = {bound:.12g}; construction rejected"
        )
    if w is None:
        W = simplex_vectors(r)
    else:
        W = np.array(w, dtype=float)
        if W.shape != (r, r - 1):
            raise ValueError(f"w must be {r} vectors in R^{r - 1}")
        if np.abs(W.sum(axis=0)).max() > tol.abs_residual:
            raise ValueError("w vectors must sum to zero")
        if np.linalg.matrix_rank(W, tol=tol.rel_eig) < r - 1:
            raise ValueError("w vectors must span R^{r-1}")
    G = tensor_product_graph(r, H)
    m = H.n
    P = np.zeros((G.n, r - 1))
    for i in range(r):
        for h in range(m):
            P[i * m + h] = W[i]
    Z = SymMatrix(np.eye(G.n) + adjacency_matrix(G) / k)
    return Fixture(
        name=f"tensor-{r}x{H.n}",
        framework=Framework(G, r - 1, P),
        stress=Z,
        expected={
            "n": r * m,
            "d": r - 1,
            "stress_corank": r - 1,
            "completability_overall": True,
        },
        description="tensor product framework with identity-plus-adjacency stress",
    )


def c5_fixtures() -> tuple[Fixture, Fixture]:
    """Two frameworks on the 5-cycle with opposite certificate behavior.

    The first places node i at angle 4*pi*i/5 on the unit circle; the
    shifted adjacency matrix is a psd stress of corank 2 and the
    unique-completion certificate passes.

    The second uses unit vectors whose consecutive angles are 3*pi/4 on
    four edges and pi on edge {4, 0} (so two nodes are antipodal).  Its
    supported stress space is spanned by the rank-one matrix on the
    antipodal pair, whose corank is 4, never the required 2, so the
    stress-based certificate cannot apply; uniqueness of the completion
    follows instead from propagating the angles around the cycle
    (see :func:`rigicert.certify.c5_angle_completion`).
    """
    G = cycle_graph(5)
    first_positions = np.array(
        [
            [math.cos(4.0 * math.pi * i / 5.0), math.sin(4.0 * math.pi * i / 5.0)]
            for i in range(5)
        ]
    )
    Z = SymMatrix(2.0 * math.cos(math.pi / 5.0) * np.eye(5) + adjacency_matrix(G))
    first = Fixture(
        name="c5-pentagram",
        framework=Framework(G, 2, first_positions),
        stress=Z,
        expected={
            "n": 5,
            "d": 2,
            "stress_corank": 2,
            "completability_overall": True,
            "zero_eigenvalues": 2,
        },
        description="5-cycle framework certified by a shifted adjacency stress",
    )
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    # Labels are rotated so the antipodal (angle pi) pair lands on edge {4, 0}.
    second_positions = np.array(
        [
            [-inv_sqrt2, -inv_sqrt2],
            [1.0, 0.0],
            [-inv_sqrt2, inv_sqrt2],
            [0.0, -1.0],
            [inv_sqrt2, inv_sqrt2],
        ]
    )
    edge_angles = (
        3.0 * math.pi / 4.0,
        3.0 * math.pi / 4.0,
        3.0 * math.pi / 4.0,
        3.0 * math.pi / 4.0,
        math.pi,
    )
    second = Fixture(
        name="c5-angles",
        framework=Framework(G, 2, second_positions),
        stress=None,
        expected={
            "n": 5,
            "d": 2,
            "spherical_stress_dim": 1,
            "stress_space_certifiable": False,
            "angle_completion_rank": 2,
        },
        metadata={
            "edge_angles": edge_angles,
            "expected_chords": {(0, 2): math.pi / 2.0, (0, 3): math.pi / 4.0},
        },
        description="5-cycle framework whose uniqueness needs the angle argument",
    )
    return first, second


def remark41_fixture() -> Fixture:
    """Four-node counterexample: a full-corank psd stress is not enough.

    A path-plus-triangle bar framework in the plane whose unique equilibrium
    stress (1,-2,1,0)(1,-2,1,0)^T is psd with corank 3 = d + 1, yet the
    framework is flexible: all edge directions lie on a conic at infinity
    (the witness form x*y vanishes on every horizontal and vertical
    direction), so the rigidity certificate fails on exactly that check.
    """
    G = TensegrityGraph(4, [(0, 1), (0, 2), (1, 2), (1, 3)])
    P = np.array([[-1.0, 0.0], [0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    v = np.array([1.0, -2.0, 1.0, 0.0])
    return Fixture(
        name="remark41",
        framework=Framework(G, 2, P, generic=False),
        stress=SymMatrix(np.outer(v, v)),
        expected={
            "n": 4,
            "d": 2,
            "stress_corank": 3,
            "equilibrium_stress_dim": 1,
            "rigidity_overall": False,
            "unique_failing_condition": "conic_at_infinity",
        },
        description="flexible framework with a psd equilibrium stress of corank d+1",
    )


def all_fixtures() -> list[Fixture]:
    """The standard gallery, in deterministic name order."""
    fixtures = [octahedron_fixture()]
    fixtures += [fr_fixture(r) for r in (2, 3, 4, 5)]
    fixtures += [gr_fixture(r) for r in (2, 3, 4, 5)]
    fixtures.append(tensor_fixture(2, cycle_graph(5)))
    from .graph import complete_graph

    fixtures.append(tensor_fixture(3, complete_graph(4)))
    first, second = c5_fixtures()
    fixtures += [first, second, remark41_fixture()]
    return fixtures


def _check_edges_covered_once(fixture: Fixture) -> tuple[bool, str]:
    triangles = fixture.metadata.get("black_triangles", ())
    counts: dict[tuple[int, int], int] = {}
    for (a, b, c) in triangles:
        for (x, y) in ((a, b), (a, c), (b, c)):
            key = (min(x, y), max(x, y))
            counts[key] = counts.get(key, 0) + 1
    pairs = set(fixture.framework.graph.edge_pairs)
    if set(counts) != pairs:
        return False, "triangle edges do not match the edge set"
    bad = [e for e, c in counts.items() if c != 1]
    if bad:
        return False, f"edges covered more than once: {bad[:3]}"
    return True, f"{len(pairs)} edges each covered exactly once"


def validate_fixture(
    fixture: Fixture, tol: Tolerance = DEFAULT_TOL
) -> list[FactCheck]:
    """Check every expected fact of a fixture; one FactCheck per fact."""
    F = fixture.framework
    checks: list[FactCheck] = []

    def add(fact: str, passed: bool, detail: str) -> None:
        checks.append(FactCheck(fact=fact, passed=bool(passed), detail=detail))

    for fact, expected in fixture.expected.items():
        if fact == "n":
            add(fact, F.n == expected, f"n = {F.n}, expected {expected}")
        elif fact == "d":
            add(fact, F.d == expected, f"d = {F.d}, expected {expected}")
        elif fact == "stress_corank":
            corank = rank_corank(fixture.stress, tol)[1]
            add(fact, corank == expected, f"corank = {corank}, expected {expected}")
        elif fact == "completability_overall":
            cert = certify_universal_completability(F, fixture.stress, tol)
            add(
                fact,
                cert.overall == expected,
                f"overall = {cert.overall}, failing = {cert.failing()}",
            )
        elif fact == "rigidity_overall":
            cert = certify_universal_rigidity(F, fixture.stress, tol)
            add(
                fact,
                cert.overall == expected,
                f"overall = {cert.overall}, failing = {cert.failing()}",
            )
        elif fact == "unique_failing_condition":
            cert = certify_universal_rigidity(F, fixture.stress, tol)
            failing = cert.failing()
            add(fact, failing == [expected], f"failing conditions = {failing}")
        elif fact == "gram_span_rank":
            pairs = ActivePairs(
                [(i, i) for i in range(F.n)] + sorted(F.graph.edge_pairs)
            )
            result = gram_nondegeneracy_check(F, pairs, tol)
            add(
                fact,
                result.span_rank == expected,
                f"span rank = {result.span_rank}, expected {expected}",
            )
        elif fact == "zero_eigenvalues":
            w = sym_eigen(fixture.stress).eigenvalues
            count = int((np.abs(w) <= 1e-9).sum())
            add(fact, count == expected, f"{count} eigenvalues within 1e-9 of 0")
        elif fact == "spherical_stress_dim":
            dim = len(spherical_stress_space(F, tol))
            add(fact, dim == expected, f"dimension = {dim}, expected {expected}")
        elif fact == "equilibrium_stress_dim":
            dim = len(equilibrium_stress_space(F, tol))
            add(fact, dim == expected, f"dimension = {dim}, expected {expected}")
        elif fact == "stress_space_certifiable":
            # Does any basis element (or its negation) have the corank the
            # unique-completion certificate needs?  Rank-one spaces only.
            basis = spherical_stress_space(F, tol)
            hits = [
                rank_corank(B, tol)[1] == F.d for B in basis
            ]
            add(
                fact,
                any(hits) == expected,
                f"basis coranks = {[rank_corank(B, tol)[1] for B in basis]}",
            )
        elif fact == "black_triangle_count":
            count = len(fixture.metadata.get("black_triangles", ()))
            add(fact, count == expected, f"{count} triangles, expected {expected}")
        elif fact == "edges_covered_once":
            ok, detail = _check_edges_covered_once(fixture)
            add(fact, ok == expected, detail)
        elif fact == "angle_completion_rank":
            angles = fixture.metadata["edge_angles"]
            X = c5_angle_completion(angles, tol)
            if X is None:
                add(fact, False, "angle completion did not apply")
            else:
                rank = rank_corank(X, tol)[0]
                chord_ok = all(
                    abs(math.acos(X[i, j]) - value) <= 1e-10
                    for (i, j), value in fixture.metadata["expected_chords"].items()
                )
                add(
                    fact,
                    rank == expected and chord_ok,
                    f"completion rank = {rank}, chords ok = {chord_ok}",
                )
        elif fact == "gd_lower_bound":
            bound = gd_lower_bound(F, fixture.stress, tol)
            add(fact, bound == expected, f"bound = {bound}, expected {expected}")
        elif fact == "nu_lower_bound":
            bound = nu_lower_bound(F.graph, fixture.stress, tol)
            add(fact, bound == expected, f"bound = {bound}, expected {expected}")
        else:
            add(fact, False, f"unknown expected fact {fact!r}")
    return checks
