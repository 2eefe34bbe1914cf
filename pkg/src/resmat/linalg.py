"""Dense linear algebra for symmetric matrices.

Self-contained kernel used by the rest of the package: a cyclic Jacobi
eigensolver, spectral pseudoinverse and inverse-square-root routines, LU
factorization with partial pivoting for determinants and linear solves,
Kronecker products, block cofactors, and inertia counts.

Everything operates on plain float64 ``numpy`` arrays, treats inputs as
read-only, and returns freshly allocated arrays.  Index sets and block
indices are 0-based throughout this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "EPS",
    "SYMMETRY_RTOL",
    "JACOBI_MAX_SWEEPS",
    "JACOBI_OFF_RTOL",
    "DimensionError",
    "NumericError",
    "SpectralDecomposition",
    "Inertia",
    "LUFactorization",
    "as_dense",
    "max_norm",
    "default_rank_tol",
    "symmetrize",
    "sym_eigen",
    "pseudo_inverse",
    "pseudo_inverse_from",
    "pd_inverse",
    "pd_inverse_sqrt",
    "kron",
    "lu_factor",
    "det_lu",
    "slogdet_lu",
    "schur_det",
    "block_cofactor",
    "block_cofactor_slog",
    "inertia_of",
    "count_inertia",
    "index_set",
    "submatrix",
]

#: Double precision machine epsilon.
EPS = float(np.finfo(np.float64).eps)

#: Relative asymmetry above which a nominally symmetric input is rejected
#: instead of silently repaired.
SYMMETRY_RTOL = 1e-10

#: Sweep cap for the cyclic Jacobi eigensolver.
JACOBI_MAX_SWEEPS = 100

#: Jacobi convergence threshold: off-diagonal Frobenius norm relative to
#: the Frobenius norm of the input.
JACOBI_OFF_RTOL = 1e-14


class DimensionError(ValueError):
    """Operands have incompatible or invalid dimensions."""


class NumericError(ArithmeticError):
    """Numerical failure: lost definiteness, singularity, or no convergence."""


def as_dense(values) -> np.ndarray:
    """Coerce ``values`` to a freshly allocated 2-D float64 array."""
    a = np.array(values, dtype=np.float64, order="C")
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got {a.ndim} dimension(s)")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise DimensionError(f"matrix must be non-empty, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NumericError("matrix has non-finite entries")
    return a


def _require_square(a: np.ndarray) -> int:
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a.shape[0]


def max_norm(a) -> float:
    """Largest absolute entry (0.0 for an empty array)."""
    a = np.asarray(a, dtype=np.float64)
    return float(np.max(np.abs(a))) if a.size else 0.0


def default_rank_tol(order: int) -> float:
    """Default relative rank tolerance for a matrix of the given order.

    Rank and definiteness decisions in this module compare eigenvalues
    against ``rank_tol * scale`` where ``scale`` is the largest eigenvalue
    magnitude; this is the relative factor used when none is supplied.
    """
    return max(int(order), 1) * EPS


def symmetrize(a, *, rtol: float = SYMMETRY_RTOL) -> np.ndarray:
    """Return ``(A + A') / 2`` after checking A is symmetric to within ``rtol``.

    Raises
    ------
    NumericError
        If the max-norm asymmetry exceeds ``rtol * (1 + max|A|)``.  A large
        asymmetry means the caller is holding the wrong matrix, and averaging
        it away would mask the bug.
    """
    a = as_dense(a)
    _require_square(a)
    gap = max_norm(a - a.T)
    if gap > rtol * (1.0 + max_norm(a)):
        raise NumericError(
            f"matrix is not symmetric: max asymmetry {gap:.3e} exceeds "
            f"relative tolerance {rtol:.1e}"
        )
    return (a + a.T) / 2.0


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (descending) and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def order(self) -> int:
        return self.eigenvalues.size

    def assemble(self, values) -> np.ndarray:
        """Build ``V diag(values) V'`` for an arbitrary diagonal vector."""
        v = self.eigenvectors
        return (v * np.asarray(values, dtype=np.float64)) @ v.T

    def reconstruct(self) -> np.ndarray:
        """Rebuild the decomposed matrix ``V diag(eigenvalues) V'``."""
        return self.assemble(self.eigenvalues)


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative, and (numerically) zero eigenvalues."""

    positive: int
    negative: int
    zero: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)


def _off_norm(a: np.ndarray) -> float:
    """Frobenius norm of the off-diagonal part."""
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def _jacobi_rotate(work: np.ndarray, vectors: np.ndarray, p: int, q: int) -> None:
    """Apply one two-sided Givens rotation zeroing ``work[p, q]`` in place."""
    apq = work[p, q]
    app = work[p, p]
    aqq = work[q, q]
    diff = aqq - app
    if abs(apq) < 1e-36 * abs(diff):
        # The rotation angle underflows; the first-order tangent is exact
        # to working precision and avoids overflow in diff / (2 apq).
        t = apq / diff
    else:
        theta = diff / (2.0 * apq)
        t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    row_p = work[p, :].copy()
    row_q = work[q, :].copy()
    work[p, :] = c * row_p - s * row_q
    work[q, :] = s * row_p + c * row_q
    col_p = work[:, p].copy()
    col_q = work[:, q].copy()
    work[:, p] = c * col_p - s * col_q
    work[:, q] = s * col_p + c * col_q
    # The (p, p), (q, q), (p, q) entries have closed-form updates that are
    # more accurate than the vector arithmetic above.
    work[p, p] = app - t * apq
    work[q, q] = aqq + t * apq
    work[p, q] = 0.0
    work[q, p] = 0.0

    vec_p = vectors[:, p].copy()
    vec_q = vectors[:, q].copy()
    vectors[:, p] = c * vec_p - s * vec_q
    vectors[:, q] = s * vec_p + c * vec_q


def sym_eigen(a, *, max_sweeps: int = JACOBI_MAX_SWEEPS) -> SpectralDecomposition:
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.

    The input is symmetrized via :func:`symmetrize` (rejecting material
    asymmetry), then rotated until the off-diagonal Frobenius norm drops to
    ``JACOBI_OFF_RTOL`` times the Frobenius norm of the input.  Eigenvalues
    are returned in descending order with eigenvectors in matching columns.

    Raises
    ------
    NumericError
        If convergence is not reached within ``max_sweeps`` sweeps, or the
        input is materially asymmetric.
    """
    work = symmetrize(a)
    n = work.shape[0]
    vectors = np.eye(n)
    target = JACOBI_OFF_RTOL * float(np.sqrt(np.sum(work * work)))
    # Entries at or below this cannot, even jointly, hold the off-diagonal
    # norm above the target, so rotations on them are wasted work.
    skip = target / n
    sweeps = 0
    off = _off_norm(work)
    while off > target:
        if sweeps == max_sweeps:
            raise NumericError(
                f"Jacobi eigensolver failed to converge in {max_sweeps} sweeps: "
                f"off-diagonal norm {off:.3e}, target {target:.3e}"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(work[p, q]) > skip:
                    _jacobi_rotate(work, vectors, p, q)
        sweeps += 1
        off = _off_norm(work)
    values = np.diag(work).copy()
    order = np.argsort(-values, kind="stable")
    return SpectralDecomposition(values[order], np.ascontiguousarray(vectors[:, order]))


def pseudo_inverse_from(
    decomposition: SpectralDecomposition, rank_tol: float | None = None
) -> np.ndarray:
    """Moore-Penrose inverse of a positive semidefinite matrix, given its
    spectral decomposition.

    Eigenvalues above ``rank_tol * max|eigenvalue|`` are inverted; the rest
    are treated as exact zeros.  ``rank_tol`` defaults to
    :func:`default_rank_tol` of the order.

    Raises
    ------
    NumericError
        If an eigenvalue is negative beyond the tolerance band, i.e. the
        matrix is not positive semidefinite.
    """
    values = decomposition.eigenvalues
    n = values.size
    if rank_tol is None:
        rank_tol = default_rank_tol(n)
    scale = float(np.max(np.abs(values)))
    if scale == 0.0:
        return np.zeros((n, n))
    band = rank_tol * scale
    smallest = float(values[-1])
    if smallest < -band:
        raise NumericError(
            f"matrix is not positive semidefinite: eigenvalue {smallest:.6e}"
        )
    keep = values > band
    inverted = np.zeros(n)
    inverted[keep] = 1.0 / values[keep]
    g = decomposition.assemble(inverted)
    return (g + g.T) / 2.0


def pseudo_inverse(a, rank_tol: float | None = None) -> np.ndarray:
    """Moore-Penrose inverse of a symmetric positive semidefinite matrix.

    Spectral route: decompose with :func:`sym_eigen`, invert the eigenvalues
    above the rank band, zero out the rest.  The result is exactly
    symmetric.  ``pseudo_inverse`` of the zero matrix is the zero matrix.
    """
    return pseudo_inverse_from(sym_eigen(a), rank_tol)


def _pd_spectral_map(w, transform, rank_tol: float | None) -> np.ndarray:
    """Apply ``transform`` to the spectrum of a positive definite matrix."""
    dec = sym_eigen(w)
    values = dec.eigenvalues
    if rank_tol is None:
        rank_tol = default_rank_tol(values.size)
    largest = float(values[0])
    smallest = float(values[-1])
    if largest <= 0.0 or smallest <= rank_tol * largest:
        raise NumericError(
            f"matrix is not positive definite: smallest eigenvalue {smallest:.6e}"
        )
    mapped = dec.assemble(transform(values))
    return (mapped + mapped.T) / 2.0


def pd_inverse(w, rank_tol: float | None = None) -> np.ndarray:
    """Inverse of a symmetric positive definite matrix via its spectrum.

    Raises :class:`NumericError` if the smallest eigenvalue does not clear
    ``rank_tol * largest`` (definiteness lost).
    """
    return _pd_spectral_map(w, lambda v: 1.0 / v, rank_tol)


def pd_inverse_sqrt(w, rank_tol: float | None = None) -> np.ndarray:
    """Inverse square root ``W^{-1/2}`` of a symmetric positive definite matrix.

    The result ``S`` is the unique symmetric positive definite matrix with
    ``S W S = I``.
    """
    return _pd_spectral_map(w, lambda v: 1.0 / np.sqrt(v), rank_tol)


def kron(a, b) -> np.ndarray:
    """Kronecker product of two dense matrices."""
    return np.kron(as_dense(a), as_dense(b))


@dataclass(frozen=True)
class LUFactorization:
    """Row-pivoted LU factorization ``P A = L U`` with unit lower triangle.

    ``lu`` stores L strictly below the diagonal and U on and above it;
    ``pivots[i]`` is the row of A that became row ``i`` of ``P A``; ``sign``
    is det(P).
    """

    lu: np.ndarray
    pivots: np.ndarray
    sign: float

    @property
    def order(self) -> int:
        return self.lu.shape[0]

    def det(self) -> float:
        """Determinant as a plain float (overflow yields ``inf`` naturally)."""
        return self.sign * float(np.prod(np.diag(self.lu)))

    def slogdet(self) -> tuple[float, float]:
        """Determinant as ``(sign, log|det|)``; ``(0.0, -inf)`` when singular."""
        diag = np.diag(self.lu)
        if np.any(diag == 0.0):
            return (0.0, -math.inf)
        sign = self.sign * float(np.prod(np.sign(diag)))
        return (sign, float(np.sum(np.log(np.abs(diag)))))

    def smallest_pivot(self) -> float:
        """Magnitude of the smallest diagonal pivot."""
        return float(np.min(np.abs(np.diag(self.lu))))

    def solve(self, rhs) -> np.ndarray:
        """Solve ``A x = rhs`` for a vector or matrix right-hand side.

        Raises :class:`NumericError` on an exactly zero pivot.
        """
        b = np.array(rhs, dtype=np.float64)
        vector = b.ndim == 1
        if vector:
            b = b[:, np.newaxis]
        if b.ndim != 2 or b.shape[0] != self.order:
            raise DimensionError(
                f"right-hand side shape {b.shape} does not match order {self.order}"
            )
        diag = np.diag(self.lu)
        if np.any(diag == 0.0):
            raise NumericError("matrix is singular to working precision")
        y = b[self.pivots, :]
        n = self.order
        for i in range(1, n):
            y[i, :] -= self.lu[i, :i] @ y[:i, :]
        for i in range(n - 1, -1, -1):
            if i < n - 1:
                y[i, :] -= self.lu[i, i + 1 :] @ y[i + 1 :, :]
            y[i, :] /= diag[i]
        return y[:, 0] if vector else y


def lu_factor(a) -> LUFactorization:
    """LU factorization with partial (row) pivoting.

    Never raises on singular input: a zero pivot column is simply skipped so
    the determinant comes out exactly zero; :meth:`LUFactorization.solve`
    refuses such factorizations.
    """
    lu = as_dense(a).copy()
    n = _require_square(lu)
    pivots = np.arange(n)
    sign = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if lu[p, k] == 0.0:
            continue
        if p != k:
            lu[[k, p], :] = lu[[p, k], :]
            pivots[[k, p]] = pivots[[p, k]]
            sign = -sign
        lu[k + 1 :, k] /= lu[k, k]
        if k + 1 < n:
            lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return LUFactorization(lu, pivots, sign)


def det_lu(a) -> float:
    """Determinant via LU with partial pivoting.

    Exact for (permuted) triangular inputs; singular inputs give exactly 0.
    """
    return lu_factor(a).det()


def slogdet_lu(a) -> tuple[float, float]:
    """Determinant as ``(sign, log|det|)`` via LU; overflow-safe."""
    return lu_factor(a).slogdet()


def schur_det(a, split: int) -> float:
    """Determinant via the Schur complement of the leading ``split`` block:
    ``det A = det(A11) * det(A22 - A21 A11^{-1} A12)``.

    Raises
    ------
    DimensionError
        If ``split`` is not in ``[1, n - 1]``.
    NumericError
        If the leading block is numerically singular.
    """
    a = as_dense(a)
    n = _require_square(a)
    if not 1 <= split <= n - 1:
        raise DimensionError(f"split {split} not in [1, {n - 1}] for order {n}")
    a11 = a[:split, :split]
    factor = lu_factor(a11)
    if factor.smallest_pivot() <= default_rank_tol(split) * max_norm(a11):
        raise NumericError("leading block is numerically singular")
    x = factor.solve(a[:split, split:])
    complement = a[split:, split:] - a[split:, :split] @ x
    return factor.det() * det_lu(complement)


def _cofactor_pieces(a, i: int, j: int, s: int) -> tuple[float, np.ndarray]:
    a = as_dense(a)
    n = _require_square(a)
    if s < 1 or n % s != 0:
        raise DimensionError(f"order {n} is not a multiple of block size {s}")
    blocks = n // s
    if not (0 <= i < blocks and 0 <= j < blocks):
        raise DimensionError(
            f"block index ({i}, {j}) out of range for {blocks} blocks"
        )
    rows = np.arange(i * s, (i + 1) * s)
    cols = np.arange(j * s, (j + 1) * s)
    # Sign from the sum of the deleted 1-based absolute row and column indices.
    exponent = int(rows.sum() + rows.size + cols.sum() + cols.size)
    sign = -1.0 if exponent % 2 else 1.0
    minor = np.delete(np.delete(a, rows, axis=0), cols, axis=1)
    return sign, minor


def block_cofactor(a, i: int, j: int, s: int) -> float:
    """Cofactor of the ``(i, j)`` block (0-based) of a block matrix with
    ``s x s`` blocks: the signed determinant of A with block row ``i`` and
    block column ``j`` deleted."""
    sign, minor = _cofactor_pieces(a, i, j, s)
    if minor.size == 0:
        return sign
    return sign * det_lu(minor)


def block_cofactor_slog(a, i: int, j: int, s: int) -> tuple[float, float]:
    """Block cofactor as ``(sign, log|value|)``; overflow-safe."""
    sign, minor = _cofactor_pieces(a, i, j, s)
    if minor.size == 0:
        return (sign, 0.0)
    det_sign, log_abs = slogdet_lu(minor)
    return (sign * det_sign, log_abs)


def count_inertia(values, zero_tol: float | None = None) -> Inertia:
    """Inertia counts from a vector of eigenvalues.

    Eigenvalues within ``zero_tol * max|eigenvalue|`` of zero count as zero;
    ``zero_tol`` defaults to :func:`default_rank_tol` of the count.
    """
    values = np.asarray(values, dtype=np.float64)
    n = values.size
    if zero_tol is None:
        zero_tol = default_rank_tol(n)
    scale = float(np.max(np.abs(values))) if n else 0.0
    band = zero_tol * scale
    positive = int(np.sum(values > band))
    negative = int(np.sum(values < -band))
    return Inertia(positive, negative, n - positive - negative)


def inertia_of(a, zero_tol: float | None = None) -> Inertia:
    """Inertia (positive, negative, zero eigenvalue counts) of a symmetric
    matrix, computed from its Jacobi spectrum."""
    return count_inertia(sym_eigen(a).eigenvalues, zero_tol)


def index_set(indices, order: int) -> tuple[int, ...]:
    """Validate a strictly increasing 0-based index set within ``[0, order)``."""
    idx = tuple(int(i) for i in indices)
    if not idx:
        raise DimensionError("index set must be non-empty")
    for a, b in zip(idx, idx[1:]):
        if a >= b:
            raise DimensionError(f"index set must be strictly increasing, got {idx}")
    if idx[0] < 0 or idx[-1] >= order:
        raise DimensionError(f"index set {idx} out of range for order {order}")
    return idx


def submatrix(a, rows, cols=None) -> np.ndarray:
    """Select the submatrix on the given (strictly increasing, 0-based) row
    and column index sets; ``cols`` defaults to ``rows``."""
    a = as_dense(a)
    rows = index_set(rows, a.shape[0])
    cols = rows if cols is None else index_set(cols, a.shape[1])
    return a[np.ix_(rows, cols)]
