"""Stress spaces and stress-matrix verification.

A spherical stress for a framework is a symmetric matrix supported on the
graph (zero on non-edges, free diagonal) that annihilates the configuration
matrix.  An equilibrium stress additionally annihilates the all-ones vector,
which pins its diagonal to the negated row sums of the off-diagonal part.
Both kinds come with sign rules on cables and struts and are verified
entry by entry into a :class:`StressReport`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .framework import Framework, configuration
from .graph import EdgeKind, non_edges
from .numkit import (
    DEFAULT_TOL,
    MatrixLike,
    SymMatrix,
    Tolerance,
    as_sym_array,
    psd_check,
    project_psd,
    rank_corank,
    smat,
    svd_nullspace,
    svec,
    sym_eigen,
)

__all__ = [
    "StressKind",
    "StressReport",
    "FindStressParams",
    "spherical_stress_space",
    "equilibrium_stress_space",
    "verify_spherical_stress",
    "verify_equilibrium_stress",
    "lift_stress",
    "restrict_stress",
    "find_psd_stress",
]


class StressKind(enum.Enum):
    SPHERICAL = "spherical"
    EQUILIBRIUM = "equilibrium"


@dataclass(frozen=True)
class StressReport:
    """Per-condition verdicts for a candidate stress matrix.

    ``max_equilibrium_residual`` is the largest entry of the annihilation
    residual (stress times configuration matrix; for equilibrium stresses
    also the row sums).
    """

    kind: StressKind
    support_ok: bool
    sign_ok: bool
    psd_ok: bool
    equilibrium_ok: bool
    corank_ok: bool
    corank: int
    min_eigenvalue: float
    max_equilibrium_residual: float

    @property
    def feasible(self) -> bool:
        """Support, sign, psd and annihilation conditions all hold."""
        return self.support_ok and self.sign_ok and self.psd_ok and self.equilibrium_ok

    @property
    def certifies(self) -> bool:
        """Feasible and with the exact corank the certificate needs."""
        return self.feasible and self.corank_ok


@dataclass(frozen=True)
class FindStressParams:
    """Knobs for the alternating-projection stress search."""

    max_iterations: int = 10_000
    convergence_tol: float = 1e-10
    min_norm: float = 1e-6


def _orthonormalize_matrices(mats: list[np.ndarray], n: int) -> list[SymMatrix]:
    """Orthonormalize independent symmetric matrices in the svec isometry."""
    if not mats:
        return []
    S = np.array([svec(m) for m in mats]).T
    q, _ = np.linalg.qr(S)
    return [smat(q[:, k], n) for k in range(q.shape[1])]


def spherical_stress_space(
    F: Framework, tol: Tolerance = DEFAULT_TOL
) -> list[SymMatrix]:
    """Orthonormal basis of the supported matrices annihilating the positions.

    The space is { Z symmetric : Z zero on non-edges, Z P = 0 }; sign and
    psd constraints are deliberately not imposed here.
    """
    P, _ = configuration(F)
    n = F.n
    pairs = [(i, i) for i in range(n)] + sorted(F.graph.edge_pairs)
    cols = []
    for (a, b) in pairs:
        col = np.zeros((n, F.d))
        col[a] += P[b]
        if a != b:
            col[b] += P[a]
        cols.append(col.ravel())
    A = np.array(cols).T
    null = svd_nullspace(A, tol)
    mats = []
    for k in range(null.shape[1]):
        Z = np.zeros((n, n))
        for coeff, (a, b) in zip(null[:, k], pairs):
            Z[a, b] += coeff
            if a != b:
                Z[b, a] += coeff
        mats.append(Z)
    return _orthonormalize_matrices(mats, n)


def equilibrium_stress_space(
    F: Framework, tol: Tolerance = DEFAULT_TOL
) -> list[SymMatrix]:
    """Orthonormal basis of the equilibrium stresses of a framework.

    Stresses are parametrized by edge weights w, with the matrix
    sum_e w_e (e_i - e_j)(e_i - e_j)^T, so the all-ones vector is
    annihilated structurally; the remaining constraint is annihilating
    the configuration matrix.
    """
    P, _ = configuration(F)
    n = F.n
    edges = sorted(F.graph.edge_pairs)
    if not edges:
        return []
    cols = []
    for (i, j) in edges:
        col = np.zeros((n, F.d))
        diff = P[i] - P[j]
        col[i] += diff
        col[j] -= diff
        cols.append(col.ravel())
    A = np.array(cols).T
    null = svd_nullspace(A, tol)
    mats = []
    for k in range(null.shape[1]):
        Om = np.zeros((n, n))
        for w, (i, j) in zip(null[:, k], edges):
            Om[i, i] += w
            Om[j, j] += w
            Om[i, j] -= w
            Om[j, i] -= w
        mats.append(Om)
    return _orthonormalize_matrices(mats, n)


def _support_residual(F: Framework, Z: np.ndarray) -> float:
    worst = 0.0
    for (i, j) in non_edges(F.graph):
        worst = max(worst, abs(Z[i, j]))
    return worst


def _sign_ok(F: Framework, Z: np.ndarray, tol: Tolerance) -> bool:
    # Entries within +-abs_residual of zero satisfy either sign rule.
    for (i, j) in F.graph.cables:
        if Z[i, j] < -tol.abs_residual:
            return False
    for (i, j) in F.graph.struts:
        if Z[i, j] > tol.abs_residual:
            return False
    return True


def verify_spherical_stress(
    F: Framework, Z: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> StressReport:
    """Check a candidate spherical stress condition by condition.

    Expected corank is the ambient dimension d.
    """
    Za = as_sym_array(Z)
    if Za.shape[0] != F.n:
        raise ValueError(f"stress has order {Za.shape[0]}, framework has {F.n} nodes")
    P, _ = configuration(F)
    residual = float(np.abs(Za @ P).max())
    rank, corank = rank_corank(Za, tol)
    return StressReport(
        kind=StressKind.SPHERICAL,
        support_ok=_support_residual(F, Za) <= tol.abs_residual,
        sign_ok=_sign_ok(F, Za, tol),
        psd_ok=psd_check(Za, tol),
        equilibrium_ok=residual <= tol.abs_residual,
        corank_ok=corank == F.d,
        corank=corank,
        min_eigenvalue=float(sym_eigen(Za).eigenvalues[0]),
        max_equilibrium_residual=residual,
    )


def verify_equilibrium_stress(
    F: Framework, Omega: MatrixLike, tol: Tolerance = DEFAULT_TOL
) -> StressReport:
    """Check a candidate equilibrium stress condition by condition.

    The annihilation residual covers both the row sums and the product
    with the configuration matrix; expected corank is d + 1.
    """
    Om = as_sym_array(Omega)
    if Om.shape[0] != F.n:
        raise ValueError(f"stress has order {Om.shape[0]}, framework has {F.n} nodes")
    P, _ = configuration(F)
    residual = max(
        float(np.abs(Om @ np.ones(F.n)).max()), float(np.abs(Om @ P).max())
    )
    rank, corank = rank_corank(Om, tol)
    return StressReport(
        kind=StressKind.EQUILIBRIUM,
        support_ok=_support_residual(F, Om) <= tol.abs_residual,
        sign_ok=_sign_ok(F, Om, tol),
        psd_ok=psd_check(Om, tol),
        equilibrium_ok=residual <= tol.abs_residual,
        corank_ok=corank == F.d + 1,
        corank=corank,
        min_eigenvalue=float(sym_eigen(Om).eigenvalues[0]),
        max_equilibrium_residual=residual,
    )


def lift_stress(F: Framework, Z: MatrixLike, tol: Tolerance = DEFAULT_TOL) -> SymMatrix:
    """Border a spherical stress into an equilibrium stress for the suspension.

    With w = -Z e and w0 = -w^T e, the bordered matrix annihilates both the
    all-ones vector and the extended configuration by construction, and its
    corank exceeds the corank of Z by one.  The apex occupies the last index,
    matching :func:`rigicert.framework.extend_framework`.
    """
    Za = as_sym_array(Z)
    report = verify_spherical_stress(F, Za, tol)
    if not report.support_ok:
        raise ValueError("stress is not supported on the graph; cannot lift")
    if not report.equilibrium_ok:
        raise ValueError(
            "stress does not annihilate the configuration matrix; cannot lift"
        )
    w = -Za @ np.ones(F.n)
    w0 = -float(w @ np.ones(F.n))
    n = F.n
    Om = np.zeros((n + 1, n + 1))
    Om[:n, :n] = Za
    Om[:n, n] = w
    Om[n, :n] = w
    Om[n, n] = w0
    return SymMatrix(Om)


def restrict_stress(Omega: MatrixLike) -> SymMatrix:
    """Delete the apex row and column (the last index) of a lifted stress."""
    Om = as_sym_array(Omega)
    if Om.shape[0] < 2:
        raise ValueError("cannot restrict a matrix of order 1")
    return SymMatrix(Om[:-1, :-1])


def _clip_signs(F: Framework, Z: np.ndarray) -> np.ndarray:
    if not (F.graph.cables or F.graph.struts):
        return Z
    Z = Z.copy()
    for (i, j) in F.graph.cables:
        v = max(Z[i, j], 0.0)
        Z[i, j] = Z[j, i] = v
    for (i, j) in F.graph.struts:
        v = min(Z[i, j], 0.0)
        Z[i, j] = Z[j, i] = v
    return Z


def find_psd_stress(
    F: Framework,
    kind: StressKind,
    params: FindStressParams | None = None,
    tol: Tolerance = DEFAULT_TOL,
) -> SymMatrix | None:
    """Search the stress space for a psd, sign-feasible element.

    Alternating projections between the stress linear space (with cable and
    strut entries clipped to their sign constraints) and the psd cone,
    starting from the projection of the identity.  The search is a convex
    feasibility heuristic: it is deterministic and any output re-verifies,
    but it may fail to find a feasible point even when one exists.  Returns
    None when the iterates collapse below ``min_norm`` or fail to verify.
    """
    if params is None:
        params = FindStressParams()
    if kind is StressKind.SPHERICAL:
        basis = spherical_stress_space(F, tol)
        verify = verify_spherical_stress
    else:
        basis = equilibrium_stress_space(F, tol)
        verify = verify_equilibrium_stress
    if not basis:
        return None
    n = F.n
    B = np.array([svec(b) for b in basis]).T

    def to_space(M: np.ndarray) -> np.ndarray:
        v = B @ (B.T @ svec(M))
        return _clip_signs(F, smat(v, n).array)

    Y = to_space(np.eye(n))
    for _ in range(params.max_iterations):
        prev = Y
        Y = to_space(project_psd(Y).array)
        if np.abs(Y - prev).max() < params.convergence_tol:
            break
    if np.linalg.norm(Y) < params.min_norm:
        return None
    Z = SymMatrix(Y)
    return Z if verify(F, Z, tol).feasible else None
