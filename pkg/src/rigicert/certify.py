"""Certificate checkers for unique psd completions and universal rigidity.

The two headline checks are sufficient conditions, each combining a stress
matrix certificate with a nondegeneracy condition on the framework:

* :func:`certify_universal_completability` -- the Gram matrix of the
  framework is the unique psd matrix with the prescribed diagonal and edge
  entries (with inequalities on cables and struts);
* :func:`certify_universal_rigidity` -- every configuration with the same
  bar lengths (and cable/strut inequalities) is congruent to the given one.

Around them sit the supporting geometry: perturbation spaces and extreme
points of spectrahedra, primal/dual nondegeneracy of semidefinite programs,
strict complementarity, the transversality condition on supported matrices
(no nonzero symmetric matrix vanishes on diagonal-plus-edges while
annihilating M), a closed-form angle-propagation argument for the 5-cycle,
and certified lower bounds for two graph parameters.

All mathematical failures are reported inside the returned objects; only
malformed inputs raise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .framework import (
    Framework,
    configuration,
    euclidean_constraint_matrix,
    extend_framework,
    gram,
    span_checks,
    spherical_constraint_matrix,
)
from .graph import TensegrityGraph, min_degree, non_edges
from .numkit import (
    DEFAULT_TOL,
    MatrixLike,
    SymMatrix,
    Tolerance,
    as_sym_array,
    nullspace_basis,
    orthonormal_columns,
    psd_check,
    rank_corank,
    smat,
    span_rank,
    svd_nullspace,
    svd_rank,
    svec,
    sym_eigen,
    sym_outer,
    sym_unit,
)
from .stress import (
    StressReport,
    lift_stress,
    verify_equilibrium_stress,
    verify_spherical_stress,
)

__all__ = [
    "CertificateKind",
    "ConditionResult",
    "Certificate",
    "ActivePairs",
    "RankConditionResult",
    "SapResult",
    "SdpNondegeneracy",
    "spherical_active_pairs",
    "euclidean_active_pairs",
    "supported_pair_matrices",
    "nonedge_pair_matrices",
    "gram_nondegeneracy_check",
    "conic_at_infinity_check",
    "certify_universal_completability",
    "certify_universal_rigidity",
    "certify_generic_universal_rigidity",
    "sap_check",
    "perturbation_space",
    "extreme_point_check",
    "sdp_nondegeneracy_checks",
    "strict_complementarity_check",
    "weak_activity_condition_check",
    "c5_angle_completion",
    "gd_lower_bound",
    "nu_lower_bound",
    "completability_oracle_agreement",
    "sap_route_agreement",
    "suspension_equivalence",
    "SuspensionEquivalence",
    "AgreementResult",
]


class CertificateKind(enum.Enum):
    UNIVERSAL_COMPLETABILITY = "universal-completability"
    UNIVERSAL_RIGIDITY = "universal-rigidity"
    GENERIC_UNIVERSAL_RIGIDITY = "generic-universal-rigidity"


@dataclass(frozen=True)
class ConditionResult:
    passed: bool
    detail: str
    data: Mapping[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class Certificate:
    """Named pass/fail record per condition; overall is the conjunction."""

    kind: CertificateKind
    conditions: Mapping[str, ConditionResult]
    overall: bool

    def failing(self) -> list[str]:
        return [name for name, c in self.conditions.items() if not c.passed]


@dataclass(frozen=True)
class ActivePairs:
    """An unordered set of node pairs, diagonal pairs (i, i) allowed."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        normalized = sorted({(min(i, j), max(i, j)) for (i, j) in pairs})
        if any(i < 0 for (i, _) in normalized):
            raise ValueError("pair indices must be nonnegative")
        object.__setattr__(self, "pairs", tuple(normalized))

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class RankConditionResult:
    """Outcome of a full-span test on a family of rank-one matrices.

    On failure, ``witness`` is a unit-Frobenius symmetric matrix orthogonal
    to the whole family: a nonzero quadratic form vanishing on every pair.
    """

    passed: bool
    span_rank: int
    required_rank: int
    witness: SymMatrix | None


@dataclass(frozen=True)
class SapResult:
    """Transversality verdict for a supported matrix.

    ``passed`` comes from the nullspace route (no supported-complement
    matrix annihilates M); ``span_route_passed`` is the independent
    full-span check on the kernel representation of M, kept for
    cross-validation.
    """

    passed: bool
    supported: bool
    dimension: int | None
    witness: SymMatrix | None
    span_route_passed: bool | None

    @property
    def routes_agree(self) -> bool:
        return self.span_route_passed is None or self.passed == self.span_route_passed


@dataclass(frozen=True)
class SdpNondegeneracy:
    primal_nondegenerate: bool
    dual_nondegenerate: bool


@dataclass(frozen=True)
class AgreementResult:
    agrees: bool
    verdicts: Mapping[str, bool]


def _as_pairs(pairs) -> tuple[tuple[int, int], ...]:
    if isinstance(pairs, ActivePairs):
        return pairs.pairs
    return ActivePairs(pairs).pairs


def _check_indices(pairs, n: int) -> None:
    for (i, j) in pairs:
        if j >= n:
            raise ValueError(f"pair ({i}, {j}) out of range for {n} nodes")


def spherical_active_pairs(
    F: Framework, Z: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> ActivePairs:
    """Diagonal and bar pairs plus cables/struts carrying nonzero stress.

    A cable or strut entry counts as nonzero when it exceeds abs_residual
    in magnitude; the threshold is part of the certificate's tolerance.
    """
    Za = as_sym_array(Z)
    pairs = [(i, i) for i in range(F.n)]
    pairs += list(F.graph.bars)
    for (i, j) in list(F.graph.cables) + list(F.graph.struts):
        if abs(Za[i, j]) > tol.abs_residual:
            pairs.append((i, j))
    return ActivePairs(pairs)


def euclidean_active_pairs(
    F: Framework, Omega: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> ActivePairs:
    """Bar pairs plus cables/struts carrying nonzero stress (no diagonal)."""
    Om = as_sym_array(Omega)
    pairs = list(F.graph.bars)
    for (i, j) in list(F.graph.cables) + list(F.graph.struts):
        if abs(Om[i, j]) > tol.abs_residual:
            pairs.append((i, j))
    return ActivePairs(pairs)


def supported_pair_matrices(G: TensegrityGraph) -> list[SymMatrix]:
    """Unit symmetric matrices for the diagonal and every edge of G."""
    mats = [sym_unit(G.n, i, i) for i in range(G.n)]
    mats += [sym_unit(G.n, i, j) for (i, j) in sorted(G.edge_pairs)]
    return mats


def nonedge_pair_matrices(G: TensegrityGraph) -> list[SymMatrix]:
    """Unit symmetric matrices for every non-edge of G."""
    return [sym_unit(G.n, i, j) for (i, j) in non_edges(G)]


def _rank_condition(
    mats: list[SymMatrix], dim: int, tol: Tolerance
) -> RankConditionResult:
    required = dim * (dim + 1) // 2
    if not mats:
        witness = smat(np.eye(required)[:, 0], dim) if required else None
        return RankConditionResult(required == 0, 0, required, witness)
    stacked = np.array([svec(m) for m in mats])
    rank = svd_rank(stacked, tol)
    if rank == required:
        return RankConditionResult(True, rank, required, None)
    _, _, vt = np.linalg.svd(stacked, full_matrices=True)
    witness_vec = vt[rank]
    witness_vec = witness_vec / np.linalg.norm(witness_vec)
    return RankConditionResult(False, rank, required, smat(witness_vec, dim))


def gram_nondegeneracy_check(
    F: Framework, pairs, tol: Tolerance = DEFAULT_TOL
) -> RankConditionResult:
    """Do the symmetrized products p_i p_j^T over the pairs span all of S^d?

    Passing means the only quadratic form R with p_i^T R p_j = 0 on every
    pair is R = 0; the failing witness is such a nonzero R.
    """
    pairs = _as_pairs(pairs)
    _check_indices(pairs, F.n)
    mats = [spherical_constraint_matrix(F, i, j) for (i, j) in pairs]
    return _rank_condition(mats, F.d, tol)


def conic_at_infinity_check(
    F: Framework, pairs, tol: Tolerance = DEFAULT_TOL
) -> RankConditionResult:
    """Do the edge-direction products (p_i - p_j)(p_i - p_j)^T span S^d?

    Passing means the edge directions do not lie on a conic at infinity;
    the failing witness is a nonzero form vanishing on every direction.
    """
    pairs = _as_pairs(pairs)
    _check_indices(pairs, F.n)
    if any(i == j for (i, j) in pairs):
        raise ValueError("edge-direction pairs must be off-diagonal")
    mats = [euclidean_constraint_matrix(F, i, j) for (i, j) in pairs]
    return _rank_condition(mats, F.d, tol)


def _stress_conditions(report: StressReport, d: int, expected_corank: int):
    return {
        "stress_support": ConditionResult(
            report.support_ok, "stress vanishes on non-edges"
        ),
        "stress_signs": ConditionResult(
            report.sign_ok, "cable entries >= 0 and strut entries <= 0"
        ),
        "stress_psd": ConditionResult(
            report.psd_ok,
            "stress is positive semidefinite",
            {"min_eigenvalue": report.min_eigenvalue},
        ),
        "stress_equilibrium": ConditionResult(
            report.equilibrium_ok,
            "stress annihilates the configuration",
            {"max_residual": report.max_equilibrium_residual},
        ),
        "stress_corank": ConditionResult(
            report.corank_ok,
            f"stress corank {report.corank} (need {expected_corank})",
            {"corank": report.corank, "expected": expected_corank},
        ),
    }


def certify_universal_completability(
    F: Framework, Z: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> Certificate:
    """Sufficient condition for the Gram matrix to be the unique psd completion.

    Requires: positions spanning R^d linearly; a psd stress supported on the
    graph with the right signs, corank exactly d, annihilating the positions;
    and the full-span condition on the diagonal, bars and stress-active
    cables/struts.
    """
    Za = as_sym_array(Z)
    if Za.shape[0] != F.n:
        raise ValueError(f"stress has order {Za.shape[0]}, framework has {F.n} nodes")
    report = verify_spherical_stress(F, Za, tol)
    span = span_checks(F, tol)
    nondeg = gram_nondegeneracy_check(F, spherical_active_pairs(F, Za, tol), tol)
    conditions = {
        "linear_span": ConditionResult(
            span.linear_span_full, f"positions span R^{F.d} linearly"
        ),
    }
    conditions.update(_stress_conditions(report, F.d, F.d))
    conditions["gram_nondegeneracy"] = ConditionResult(
        nondeg.passed,
        f"active products span rank {nondeg.span_rank} of {nondeg.required_rank}",
        {"span_rank": nondeg.span_rank, "required": nondeg.required_rank},
    )
    overall = all(c.passed for c in conditions.values())
    return Certificate(CertificateKind.UNIVERSAL_COMPLETABILITY, conditions, overall)


def certify_universal_rigidity(
    F: Framework, Omega: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> Certificate:
    """Sufficient condition for universal rigidity of a tensegrity framework.

    Requires: positions spanning R^d affinely; a psd equilibrium stress with
    the right signs and corank exactly d + 1; and edge directions of bars and
    stress-active cables/struts not lying on a conic at infinity.
    """
    Om = as_sym_array(Omega)
    if Om.shape[0] != F.n:
        raise ValueError(f"stress has order {Om.shape[0]}, framework has {F.n} nodes")
    report = verify_equilibrium_stress(F, Om, tol)
    span = span_checks(F, tol)
    conic = conic_at_infinity_check(F, euclidean_active_pairs(F, Om, tol), tol)
    conditions = {
        "affine_span": ConditionResult(
            span.affine_span_full, f"positions span R^{F.d} affinely"
        ),
    }
    conditions.update(_stress_conditions(report, F.d, F.d + 1))
    conditions["conic_at_infinity"] = ConditionResult(
        conic.passed,
        f"active edge directions span rank {conic.span_rank} of {conic.required_rank}",
        {"span_rank": conic.span_rank, "required": conic.required_rank},
    )
    overall = all(c.passed for c in conditions.values())
    return Certificate(CertificateKind.UNIVERSAL_RIGIDITY, conditions, overall)


def certify_generic_universal_rigidity(
    F: Framework, Omega: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> Certificate:
    """Rigidity certificate for frameworks declared generic.

    For generic configurations the conic condition follows from a psd
    equilibrium stress of corank d + 1; the reported conditions are the
    genericity declaration, the stress checks, a minimum-degree check on
    the subgraph of stress-active edges, and (run anyway, as a numerical
    safeguard) the conic check itself.
    """
    Om = as_sym_array(Omega)
    if Om.shape[0] != F.n:
        raise ValueError(f"stress has order {Om.shape[0]}, framework has {F.n} nodes")
    report = verify_equilibrium_stress(F, Om, tol)
    active = euclidean_active_pairs(F, Om, tol)
    active_graph = TensegrityGraph(F.n, [(i, j) for (i, j) in active])
    deg = min_degree(active_graph)
    conic = conic_at_infinity_check(F, active, tol)
    conditions = {
        "generic_declared": ConditionResult(
            F.generic, "framework is declared generic"
        ),
    }
    conditions.update(_stress_conditions(report, F.d, F.d + 1))
    conditions["min_degree"] = ConditionResult(
        deg >= F.d,
        f"stress-active subgraph has minimum degree {deg} (need >= {F.d})",
        {"min_degree": deg},
    )
    conditions["conic_at_infinity"] = ConditionResult(
        conic.passed,
        f"active edge directions span rank {conic.span_rank} of {conic.required_rank}",
        {"span_rank": conic.span_rank, "required": conic.required_rank},
    )
    overall = all(c.passed for c in conditions.values())
    return Certificate(CertificateKind.GENERIC_UNIVERSAL_RIGIDITY, conditions, overall)


def _svec_index_map(n: int) -> dict[tuple[int, int], int]:
    iu = np.triu_indices(n)
    return {(int(i), int(j)): k for k, (i, j) in enumerate(zip(*iu))}


def _kernel_congruence_basis(P0: np.ndarray) -> np.ndarray:
    """Orthonormal svec basis of { P0 W P0^T : W symmetric } for orthonormal P0."""
    n, c = P0.shape
    cols = []
    for a in range(c):
        cols.append(svec(sym_outer(P0[:, a])))
        for b in range(a + 1, c):
            m = sym_outer(P0[:, a], P0[:, b]).array * math.sqrt(2.0)
            cols.append(svec(m))
    if not cols:
        return np.zeros((n * (n + 1) // 2, 0))
    return np.array(cols).T


def _intersection(
    U: np.ndarray, V: np.ndarray, tol: Tolerance
) -> tuple[int, np.ndarray | None]:
    """Dimension of span(U) const span(V) and one unit element, for orthonormal U, V."""
    if U.shape[1] == 0 or V.shape[1] == 0:
        return 0, None
    stacked = np.hstack([U, -V])
    null = svd_nullspace(stacked, tol)
    dim = null.shape[1]
    if dim == 0:
        return 0, None
    coeffs = null[: U.shape[1], 0]
    vec = U @ coeffs
    norm = np.linalg.norm(vec)
    if norm == 0.0:
        return dim, None
    return dim, vec / norm


def sap_check(
    G: TensegrityGraph, M: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> SapResult:
    """Transversality check for a matrix supported on the graph.

    Passes when the only symmetric matrix vanishing on the diagonal and all
    edges while annihilating M is the zero matrix.  The verdict comes from
    computing that space directly; an independent full-span check on the
    rows of an orthonormal kernel basis of M is reported alongside for
    cross-validation.  A matrix that is not supported on the graph fails
    with ``supported=False``.
    """
    Ma = as_sym_array(M)
    n = G.n
    if Ma.shape[0] != n:
        raise ValueError(f"matrix has order {Ma.shape[0]}, graph has {n} nodes")
    if any(abs(Ma[i, j]) > tol.abs_residual for (i, j) in non_edges(G)):
        return SapResult(
            passed=False,
            supported=False,
            dimension=None,
            witness=None,
            span_route_passed=None,
        )
    idx = _svec_index_map(n)
    dim_s = n * (n + 1) // 2
    ne = non_edges(G)
    U = np.zeros((dim_s, len(ne)))
    for k, (i, j) in enumerate(ne):
        U[idx[(i, j)], k] = 1.0
    P0 = nullspace_basis(Ma, tol)
    V = _kernel_congruence_basis(P0)
    dim, vec = _intersection(U, V, tol)
    witness = smat(vec, n) if vec is not None else None

    c = P0.shape[1]
    if c == 0:
        span_ok = True
    else:
        pair_mats = [sym_outer(P0[i]) for i in range(n)]
        pair_mats += [sym_outer(P0[i], P0[j]) for (i, j) in sorted(G.edge_pairs)]
        span_ok = span_rank(pair_mats, tol) == c * (c + 1) // 2
    return SapResult(
        passed=dim == 0,
        supported=True,
        dimension=dim,
        witness=witness,
        span_route_passed=span_ok,
    )


def _psd_factor(X: np.ndarray, tol: Tolerance) -> np.ndarray:
    """Factor a psd matrix as P P^T with P of full column rank."""
    eig = sym_eigen(X)
    w = eig.eigenvalues
    scale = np.abs(w).max()
    if scale == 0.0:
        return np.zeros((X.shape[0], 0))
    keep = w > tol.rel_eig * scale
    return eig.eigenvectors[:, keep] * np.sqrt(w[keep])


def perturbation_space(
    X: MatrixLike,
    eq_constraints: Sequence[MatrixLike],
    tol: Tolerance = DEFAULT_TOL,
) -> list[SymMatrix]:
    """Basis of the feasible perturbations of X inside its spectrahedron.

    With X = P P^T, the perturbations are the matrices P R P^T whose inner
    product with every constraint vanishes.  An empty result means X is an
    extreme point of the set cut out by the constraints.
    """
    Xa = as_sym_array(X)
    if not psd_check(Xa, tol):
        raise ValueError("perturbation space requires a psd matrix")
    P = _psd_factor(Xa, tol)
    r = P.shape[1]
    if r == 0:
        return []
    dim_r = r * (r + 1) // 2
    rows = [svec(P.T @ as_sym_array(A) @ P) for A in eq_constraints]
    A = np.array(rows) if rows else np.zeros((0, dim_r))
    null = svd_nullspace(A, tol)
    return [SymMatrix(P @ smat(null[:, k], r).array @ P.T) for k in range(null.shape[1])]


def extreme_point_check(
    X: MatrixLike,
    active_constraints: Sequence[MatrixLike],
    tol: Tolerance = DEFAULT_TOL,
) -> bool:
    """Extreme-point test via the projected-constraint full-span criterion.

    X = P P^T is extreme exactly when the matrices P^T A_i P span the whole
    symmetric space of order rank(X).
    """
    Xa = as_sym_array(X)
    if not psd_check(Xa, tol):
        raise ValueError("extreme point check requires a psd matrix")
    P = _psd_factor(Xa, tol)
    r = P.shape[1]
    if r == 0:
        return True
    projected = [SymMatrix(P.T @ as_sym_array(A) @ P) for A in active_constraints]
    return span_rank(projected, tol) == r * (r + 1) // 2


def sdp_nondegeneracy_checks(
    M: MatrixLike,
    constraints: Sequence[MatrixLike],
    active: Iterable[int] | None = None,
    tol: Tolerance = DEFAULT_TOL,
) -> SdpNondegeneracy:
    """Primal and dual nondegeneracy of a matrix for a constraint family.

    Primal nondegeneracy holds when no nonzero element of the span of the
    active constraints annihilates M (the orthogonal-complement form of the
    tangent-space condition).  Dual nondegeneracy holds when the active
    constraints, projected onto an orthonormal kernel basis of M, span the
    full symmetric space of order corank(M).
    """
    Ma = as_sym_array(M)
    acts = list(range(len(constraints))) if active is None else sorted(set(active))
    mats = [as_sym_array(constraints[i]) for i in acts]
    dim_s = Ma.shape[0] * (Ma.shape[0] + 1) // 2

    if mats:
        U = orthonormal_columns(np.array([svec(m) for m in mats]).T, tol)
    else:
        U = np.zeros((dim_s, 0))
    P0 = nullspace_basis(Ma, tol)
    V = _kernel_congruence_basis(P0)
    dim, _ = _intersection(U, V, tol)
    primal = dim == 0

    c = P0.shape[1]
    if c == 0:
        dual = True
    else:
        projected = [SymMatrix(P0.T @ m @ P0) for m in mats]
        dual = span_rank(projected, tol) == c * (c + 1) // 2 if projected else c == 0
    return SdpNondegeneracy(primal_nondegenerate=primal, dual_nondegenerate=dual)


def strict_complementarity_check(
    X: MatrixLike, Z: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> bool:
    """True when X Z = 0 (within residual) and rank X + rank Z equals the order."""
    Xa = as_sym_array(X)
    Za = as_sym_array(Z)
    if Xa.shape != Za.shape:
        raise ValueError("matrices must have the same order")
    if float(np.abs(Xa @ Za).max()) >= tol.abs_residual:
        return False
    return rank_corank(Xa, tol)[0] + rank_corank(Za, tol)[0] == Xa.shape[0]


def _tangent_space_basis(Z: np.ndarray, tol: Tolerance) -> np.ndarray:
    """Orthonormal svec basis of the tangent space at Z to its rank stratum."""
    eig = sym_eigen(Z)
    w = eig.eigenvalues
    q = eig.eigenvectors
    scale = np.abs(w).max()
    kernel = (
        np.ones(w.shape[0], dtype=bool)
        if scale == 0.0
        else np.abs(w) <= tol.rel_eig * scale
    )
    n = w.shape[0]
    cols = []
    for a in range(n):
        for b in range(a, n):
            if kernel[a] and kernel[b]:
                continue
            if a == b:
                cols.append(svec(sym_outer(q[:, a])))
            else:
                cols.append(svec(sym_outer(q[:, a], q[:, b]).array * math.sqrt(2.0)))
    if not cols:
        return np.zeros((n * (n + 1) // 2, 0))
    return np.array(cols).T


def weak_activity_condition_check(
    Z: MatrixLike,
    constraints: Sequence[MatrixLike],
    eq_indices: Iterable[int],
    jx_indices: Iterable[int],
    jz_indices: Iterable[int],
    tol: Tolerance = DEFAULT_TOL,
) -> bool:
    """Constraints active at the primal but not the dual stay representable.

    For every index in J_X setminus J_Z, the constraint matrix must lie in
    the sum of the tangent space at Z and the span of the constraints
    indexed by I and J_X.  Vacuously true when the difference is empty.
    """
    eq = sorted(set(eq_indices))
    jx = sorted(set(jx_indices))
    jz = set(jz_indices)
    need = [i for i in jx if i not in jz]
    if not need:
        return True
    Za = as_sym_array(Z)
    span_cols = [_tangent_space_basis(Za, tol)]
    members = [svec(as_sym_array(constraints[i])) for i in eq + jx]
    if members:
        span_cols.append(np.array(members).T)
    stacked = np.hstack([c for c in span_cols if c.shape[1] > 0])
    W = orthonormal_columns(stacked, tol)
    for i in need:
        a = svec(as_sym_array(constraints[i]))
        residual = a - W @ (W.T @ a)
        if np.linalg.norm(residual) >= tol.abs_residual:
            return False
    return True


def c5_angle_completion(
    edge_angles: Sequence[float], tol: Tolerance = DEFAULT_TOL
) -> SymMatrix | None:
    """Propagate five consecutive angles around a 5-cycle to a full matrix.

    ``edge_angles[i]`` is the angle between unit vectors i and i+1 (mod 5).
    When the angles sum to 4*pi, each chord angle between i and i+2 is
    forced by the requirement that the three angles of the triangle
    {i, i+1, i+2} sum to 2*pi; the remaining spherical triangle
    inequalities then hold with equality.  Returns the cosine matrix of
    the completed angles (unit diagonal) when every derived chord lies in
    [0, pi], the equalities check out and the result is psd; otherwise
    None.  Angles outside [0, pi] are rejected outright.
    """
    th = [float(a) for a in edge_angles]
    if len(th) != 5:
        raise ValueError("exactly five edge angles are required")
    for a in th:
        if not (0.0 <= a <= math.pi):
            raise ValueError(f"angle {a} outside [0, pi]")
    if abs(sum(th) - 4.0 * math.pi) > tol.abs_residual:
        return None
    chords = [2.0 * math.pi - th[i] - th[(i + 1) % 5] for i in range(5)]
    for c in chords:
        if c < -tol.abs_residual or c > math.pi + tol.abs_residual:
            return None
    for i in range(5):
        resid_a = th[i] + th[(i + 1) % 5] + chords[i] - 2.0 * math.pi
        resid_b = chords[i] + chords[(i + 3) % 5] - th[(i + 2) % 5]
        resid_c = chords[(i + 3) % 5] + th[(i + 3) % 5] + th[(i + 4) % 5] - 2.0 * math.pi
        if max(abs(resid_a), abs(resid_b), abs(resid_c)) > tol.abs_residual:
            return None
    X = np.eye(5)
    for i in range(5):
        j = (i + 1) % 5
        X[i, j] = X[j, i] = math.cos(th[i])
        k = (i + 2) % 5
        X[i, k] = X[k, i] = math.cos(chords[i])
    M = SymMatrix(X)
    return M if psd_check(M, tol) else None


def gd_lower_bound(
    F: Framework, Z: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> int | None:
    """Certified lower bound on the Gram dimension of the framework's graph.

    A framework passing the unique-completion certificate witnesses that
    its partial matrix needs rank(Gram) dimensions; returns None when the
    certificate fails.
    """
    cert = certify_universal_completability(F, Z, tol)
    if not cert.overall:
        return None
    return rank_corank(gram(F), tol)[0]


def nu_lower_bound(
    G: TensegrityGraph, M: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> int | None:
    """Certified lower bound on the maximum corank of a supported psd matrix
    with the transversality property; None when M does not qualify."""
    Ma = as_sym_array(M)
    if Ma.shape[0] != G.n:
        raise ValueError(f"matrix has order {Ma.shape[0]}, graph has {G.n} nodes")
    if not psd_check(Ma, tol):
        return None
    result = sap_check(G, Ma, tol)
    if not (result.supported and result.passed):
        return None
    return rank_corank(Ma, tol)[1]


def completability_oracle_agreement(
    F: Framework, tol: Tolerance = DEFAULT_TOL
) -> AgreementResult:
    """Three routes to the same extreme-point fact must agree.

    The Gram matrix with its diagonal-and-edge constraints is checked via
    the projected-span extreme point test, the perturbation-space dimension,
    and the full-span condition on the position products.
    """
    X = gram(F)
    constraints = supported_pair_matrices(F.graph)
    extreme = extreme_point_check(X, constraints, tol)
    pert_zero = len(perturbation_space(X, constraints, tol)) == 0
    pairs = ActivePairs(
        [(i, i) for i in range(F.n)] + sorted(F.graph.edge_pairs)
    )
    nondeg = gram_nondegeneracy_check(F, pairs, tol).passed
    verdicts = {
        "extreme_point": extreme,
        "perturbation_space_trivial": pert_zero,
        "gram_nondegeneracy": nondeg,
    }
    return AgreementResult(
        agrees=(extreme == pert_zero == nondeg), verdicts=verdicts
    )


def sap_route_agreement(
    G: TensegrityGraph, M: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> AgreementResult:
    """Nullspace, kernel-span and primal-nondegeneracy routes must agree."""
    result = sap_check(G, M, tol)
    nondeg = sdp_nondegeneracy_checks(M, nonedge_pair_matrices(G), None, tol)
    verdicts = {
        "nullspace_route": result.passed,
        "span_rank_route": bool(result.span_route_passed),
        "primal_nondegeneracy_route": nondeg.primal_nondegenerate,
    }
    agrees = result.supported and (
        result.passed == result.span_route_passed == nondeg.primal_nondegenerate
    )
    return AgreementResult(agrees=agrees, verdicts=verdicts)


@dataclass(frozen=True)
class SuspensionEquivalence:
    """Data tying a base framework's certificate to its suspension's."""

    base_certificate: Certificate
    extension_certificate: Certificate
    lifted_stress: SymMatrix
    corank_base: int
    corank_lifted: int
    ones_residual: float
    configuration_residual: float

    @property
    def verdicts_agree(self) -> bool:
        return self.base_certificate.overall == self.extension_certificate.overall


def suspension_equivalence(
    F: Framework, Z: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> SuspensionEquivalence:
    """Lift a spherical stress to the suspension and compare certificates.

    For bar frameworks the unique-completion certificate of the base and
    the rigidity certificate of the suspension (apex at the origin, lifted
    stress) are equivalent; this helper computes both sides plus the
    bordered stress residuals.
    """
    base = certify_universal_completability(F, Z, tol)
    Om = lift_stress(F, Z, tol)
    ext = extend_framework(F)
    ext_cert = certify_universal_rigidity(ext, Om, tol)
    _, Pa = configuration(ext)
    Om_a = Om.array
    ones_res = float(np.abs(Om_a @ np.ones(ext.n)).max())
    conf_res = float(np.abs(Om_a @ Pa).max())
    return SuspensionEquivalence(
        base_certificate=base,
        extension_certificate=ext_cert,
        lifted_stress=Om,
        corank_base=rank_corank(Z, tol)[1],
        corank_lifted=rank_corank(Om, tol)[1],
        ones_residual=ones_res,
        configuration_residual=conf_res,
    )
