"""Tolerance-controlled dense symmetric linear algebra.

Every certificate in this package reduces to a handful of primitives on
dense real symmetric matrices: eigendecomposition, tolerance-based rank
and nullspace, the rank of a family of symmetric matrices, and psd tests.
All rank decisions are relative to the largest eigenvalue (or singular
value) so that certificates are stable under small input perturbations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "SymMatrix",
    "Tolerance",
    "DEFAULT_TOL",
    "EigenDecomposition",
    "EigenConvergenceError",
    "sym_eigen",
    "rank_corank",
    "nullspace_basis",
    "span_rank",
    "psd_check",
    "project_psd",
    "svec",
    "smat",
    "sym_unit",
    "sym_outer",
    "svd_rank",
    "svd_nullspace",
    "orthonormal_columns",
]

_SQRT2 = np.sqrt(2.0)


class EigenConvergenceError(RuntimeError):
    """The iterative eigensolver failed to converge within its sweep cap."""


class SymMatrix:
    """Dense real symmetric matrix of order ``n``.

    The upper triangle of the input is authoritative: the lower triangle is
    overwritten at construction so that ``entries[i][j] == entries[j][i]``
    holds exactly.  Instances are immutable; the backing array is read-only.
    """

    __slots__ = ("_a",)

    def __init__(self, entries):
        if isinstance(entries, SymMatrix):
            self._a = entries._a
            return
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] < 1:
            raise ValueError("matrix order must be at least 1")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite")
        a = np.triu(a) + np.triu(a, 1).T
        a.setflags(write=False)
        self._a = a

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        """Read-only ndarray view of the entries."""
        return self._a

    def __array__(self, dtype=None, copy=None):
        if dtype is not None:
            return self._a.astype(dtype)
        return self._a

    def __getitem__(self, key):
        return self._a[key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self._a.shape == other._a.shape and bool(np.all(self._a == other._a))

    def __hash__(self):
        return hash((self._a.shape[0], self._a.tobytes()))

    def __repr__(self) -> str:
        return f"SymMatrix(n={self.n})"


MatrixLike = Union[SymMatrix, np.ndarray, Sequence[Sequence[float]]]


def as_sym_array(M: MatrixLike) -> np.ndarray:
    """Coerce to a validated symmetric ndarray (upper triangle authoritative)."""
    if isinstance(M, SymMatrix):
        return M.array
    return SymMatrix(M).array


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds shared by all checks.

    ``rel_eig`` is the relative eigenvalue/singular-value cutoff used in
    rank decisions; ``abs_residual`` is the absolute cutoff for residuals
    of linear equations (supports, equilibrium conditions, projections).
    """

    rel_eig: float = 1e-8
    abs_residual: float = 1e-8

    def __post_init__(self):
        if not (self.rel_eig > 0):
            raise ValueError("rel_eig must be positive")
        if not (self.abs_residual > 0):
            raise ValueError("abs_residual must be positive")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral decomposition M = Q diag(w) Q^T with ascending eigenvalues."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]


def sym_eigen(M: MatrixLike) -> EigenDecomposition:
    """Eigendecomposition of a symmetric matrix.

    Backed by LAPACK's symmetric eigensolver (deterministic for identical
    inputs within one build); eigenvalues are returned in ascending order
    with matching eigenvector columns.  Raises :class:`EigenConvergenceError`
    if the solver's internal iteration cap is exhausted.
    """
    a = as_sym_array(M)
    try:
        w, q = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise EigenConvergenceError(
            f"symmetric eigensolver did not converge for order {a.shape[0]}"
        ) from exc
    w.setflags(write=False)
    q.setflags(write=False)
    return EigenDecomposition(eigenvalues=w, eigenvectors=q)


def rank_corank(M: MatrixLike, tol: Tolerance = DEFAULT_TOL) -> tuple[int, int]:
    """Numerical (rank, corank) of a symmetric matrix.

    An eigenvalue counts toward the rank when |lambda| > rel_eig * max|lambda|;
    the zero matrix has rank 0.
    """
    w = sym_eigen(M).eigenvalues
    scale = np.abs(w).max()
    if scale == 0.0:
        return 0, w.shape[0]
    rank = int((np.abs(w) > tol.rel_eig * scale).sum())
    return rank, w.shape[0] - rank


def nullspace_basis(M: MatrixLike, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the numerical kernel, as an (n, corank) array.

    Columns are eigenvectors for the eigenvalues discarded by
    :func:`rank_corank`, kept in ascending-eigenvalue order.
    """
    eig = sym_eigen(M)
    w = eig.eigenvalues
    scale = np.abs(w).max()
    if scale == 0.0:
        keep = np.ones(w.shape[0], dtype=bool)
    else:
        keep = np.abs(w) <= tol.rel_eig * scale
    return eig.eigenvectors[:, keep].copy()


def svec(M: MatrixLike) -> np.ndarray:
    """Isometric vectorization of a symmetric matrix.

    Diagonal entries are kept as-is and off-diagonal entries are scaled by
    sqrt(2), so that <A, B> = svec(A) . svec(B).
    """
    a = as_sym_array(M)
    n = a.shape[0]
    iu = np.triu_indices(n)
    scale = np.full((n, n), _SQRT2)
    np.fill_diagonal(scale, 1.0)
    return (a * scale)[iu]


def smat(v: np.ndarray, n: int) -> SymMatrix:
    """Inverse of :func:`svec` for order ``n``."""
    v = np.asarray(v, dtype=float)
    if v.shape != (n * (n + 1) // 2,):
        raise ValueError(f"expected a vector of length {n * (n + 1) // 2}")
    a = np.zeros((n, n))
    iu = np.triu_indices(n)
    a[iu] = v
    off = ~np.eye(n, dtype=bool)
    a[off] /= _SQRT2
    return SymMatrix(a)


def sym_unit(n: int, i: int, j: int) -> SymMatrix:
    """Unit symmetric matrix (e_i e_j^T + e_j e_i^T) / 2 of order ``n``."""
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"indices ({i}, {j}) out of range for order {n}")
    a = np.zeros((n, n))
    if i == j:
        a[i, i] = 1.0
    else:
        a[i, j] = a[j, i] = 0.5
    return SymMatrix(a)


def sym_outer(x: np.ndarray, y: np.ndarray | None = None) -> SymMatrix:
    """Symmetrized outer product (x y^T + y x^T) / 2; equals x x^T when y is None."""
    x = np.asarray(x, dtype=float)
    if y is None:
        return SymMatrix(np.outer(x, x))
    y = np.asarray(y, dtype=float)
    return SymMatrix((np.outer(x, y) + np.outer(y, x)) / 2.0)


def span_rank(mats: Iterable[MatrixLike], tol: Tolerance = DEFAULT_TOL) -> int:
    """Rank of a family of symmetric matrices of common order.

    Each matrix is vectorized isometrically (:func:`svec`) and the rank of
    the stacked system is computed from its singular values.  The family
    spans the full space of symmetric matrices of order r exactly when the
    result equals r(r+1)/2.  An empty family has rank 0.
    """
    arrays = [as_sym_array(m) for m in mats]
    if not arrays:
        return 0
    r = arrays[0].shape[0]
    for a in arrays:
        if a.shape[0] != r:
            raise ValueError("all matrices must have the same order")
    stacked = np.array([svec(a) for a in arrays])
    return svd_rank(stacked, tol)


def psd_check(M: MatrixLike, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when the minimum eigenvalue is >= -rel_eig * max(1, max|lambda|)."""
    w = sym_eigen(M).eigenvalues
    scale = max(1.0, float(np.abs(w).max()))
    return bool(w.min() >= -tol.rel_eig * scale)


def project_psd(M: MatrixLike) -> SymMatrix:
    """Nearest (Frobenius) psd matrix: clip negative eigenvalues to zero."""
    eig = sym_eigen(M)
    w = np.clip(eig.eigenvalues, 0.0, None)
    q = eig.eigenvectors
    return SymMatrix((q * w) @ q.T)


def svd_rank(A: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> int:
    """Numerical rank of a rectangular matrix via singular values."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    if A.size == 0:
        return 0
    s = np.linalg.svd(A, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int((s > tol.rel_eig * s[0]).sum())


def svd_nullspace(A: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the right nullspace of A, as columns."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    ncols = A.shape[1]
    if A.size == 0:
        return np.eye(ncols)
    u, s, vt = np.linalg.svd(A)
    if s.size == 0 or s[0] == 0.0:
        rank = 0
    else:
        rank = int((s > tol.rel_eig * s[0]).sum())
    return vt[rank:].T.copy()


def orthonormal_columns(A: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the column span of A, as columns."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    if A.size == 0:
        return np.zeros((A.shape[0], 0))
    u, s, _ = np.linalg.svd(A, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((A.shape[0], 0))
    rank = int((s > tol.rel_eig * s[0]).sum())
    return u[:, :rank].copy()
