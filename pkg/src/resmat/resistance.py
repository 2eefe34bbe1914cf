"""Resistance matrices of matrix-weighted graphs and their closed forms.

The computational route runs through the shifted Laplacian
``M = L + (1/n) J (x) I_s`` (``J`` all-ones, ``(x)`` the Kronecker
product), which is positive definite exactly when the graph is connected.
With ``X = M^{-1}``:

* the Laplacian pseudoinverse is ``X - (1/n) J (x) I_s``,
* the block resistance matrix is ``R_{ij} = X_ii + X_jj - 2 X_ij``,
* the vertex deficit blocks ``T_i = 2 I_s - sum_{j ~ i} W_ij^{-1} R_ji``
  stack into an ``ns x s`` matrix ``T`` whose quadratic form ``T' R T`` is
  positive definite and drives two closed forms:

    det R   = (-1)^{(n-1)s} 2^{(n-3)s} det(T' R T) / c(G)
    R^{-1}  = -(1/2) L + T (T' R T)^{-1} T'

  where ``c(G)`` is the Laplacian cofactor.  The eigenvalues of ``R``
  always split ``(s, ns - s, 0)`` into positive/negative/zero, and the
  negated reciprocal Laplacian spectrum interlaces them.

A :class:`ResistanceWorkspace` computes the cheap objects eagerly (LU
solves only) and caches the spectral ones on first use, so determinant
work never pays for an eigendecomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg
from .graph import MatrixWeightedGraph, adjacency
from .laplacian import (
    BlockMatrix,
    build_incidence,
    build_laplacian,
    laplacian_cofactor,
    laplacian_cofactor_slog,
    stacked_identity,
)

__all__ = [
    "CONDITION_CONFIDENCE_LIMIT",
    "InterlaceRow",
    "ResistanceWorkspace",
    "resistance_from_pseudoinverse",
]

#: Condition number of the shifted Laplacian above which results are
#: flagged low-confidence in reports (computation still proceeds).
CONDITION_CONFIDENCE_LIMIT = 1e12


@dataclass(frozen=True)
class InterlaceRow:
    """One interlacing inequality ``mu_{s+i} <= -2/lambda_i <= mu_i``.

    ``index`` is the 1-based ``i``; ``lower`` and ``upper`` are the two
    resistance eigenvalues, ``bound`` the negated reciprocal Laplacian
    eigenvalue; ``holds`` allows slack ``1e-9 * (1 + |bound|)`` per side.
    """

    index: int
    lower: float
    bound: float
    upper: float
    holds: bool


def resistance_from_pseudoinverse(pinv: BlockMatrix) -> np.ndarray:
    """Assemble the resistance matrix from Laplacian pseudoinverse blocks:
    ``R_{ij} = K_ii + K_jj - 2 K_ij``.

    This is the textbook definition route, kept separate from the
    workspace's shifted-inverse route so the two can cross-check.
    """
    n, s = pinv.n, pinv.s
    body = np.zeros_like(pinv.body)
    for i in range(n):
        kii = pinv.block(i, i)
        for j in range(n):
            body[i * s : (i + 1) * s, j * s : (j + 1) * s] = (
                kii + pinv.block(j, j) - 2.0 * pinv.block(i, j)
            )
    return body


class ResistanceWorkspace:
    """Everything derived from one graph: Laplacian, shifted inverse,
    pseudoinverse, resistance blocks, deficit blocks, and closed forms.

    Construction never eigendecomposes a full ``ns x ns`` matrix: it is LU
    solves plus ``s x s`` spectral work on the edge weights and the deficit
    form.  The large spectra (`laplacian_spectrum`, `resistance_spectrum`,
    `shift_spectrum`) and the incidence matrix are cached properties
    computed on first access.

    Raises
    ------
    NumericError
        If the shifted Laplacian is numerically singular (input effectively
        disconnected), or the deficit quadratic form fails to be positive
        definite (which would mean an upstream computation bug).
    """

    def __init__(self, graph: MatrixWeightedGraph):
        self.graph = graph
        n, s = graph.n, graph.s
        ns = n * s
        self.laplacian = build_laplacian(graph)

        shift_body = self.laplacian.body + linalg.kron(
            np.ones((n, n)) / n, np.eye(s)
        )
        self.shift_body = shift_body
        factor = linalg.lu_factor(shift_body)
        if factor.smallest_pivot() <= linalg.default_rank_tol(ns) * linalg.max_norm(
            shift_body
        ):
            raise linalg.NumericError(
                "shifted Laplacian is numerically singular; "
                "the graph is not usably connected"
            )
        x = factor.solve(np.eye(ns))
        x = (x + x.T) / 2.0
        self.shifted_inverse = BlockMatrix(x, s)
        self._shift_factor = factor

        self.pseudoinverse = BlockMatrix(
            x - linalg.kron(np.ones((n, n)) / n, np.eye(s)), s
        )

        diag_blocks = [x[i * s : (i + 1) * s, i * s : (i + 1) * s] for i in range(n)]
        # Stacked diagonal blocks of X (ns x s), and their block diagonal.
        self.diag_stack = np.vstack(diag_blocks)
        diag_body = np.zeros((ns, ns))
        for i, block in enumerate(diag_blocks):
            diag_body[i * s : (i + 1) * s, i * s : (i + 1) * s] = block
        self.diag_blocks = BlockMatrix(diag_body, s)

        resistance = np.zeros((ns, ns))
        for i in range(n):
            for j in range(n):
                resistance[i * s : (i + 1) * s, j * s : (j + 1) * s] = (
                    diag_blocks[i]
                    + diag_blocks[j]
                    - 2.0 * x[i * s : (i + 1) * s, j * s : (j + 1) * s]
                )
        self.resistance = BlockMatrix(resistance, s)

        deficit = np.zeros((ns, s))
        for i, incident in enumerate(adjacency(graph)):
            block = 2.0 * np.eye(s)
            for j, _ in incident:
                # -L_{ij} is the inverse weight of edge {i, j}.
                inverse_weight = -self.laplacian.block(i, j)
                block -= inverse_weight @ self.resistance.block(j, i)
            deficit[i * s : (i + 1) * s, :] = block
        self.deficit = deficit

        form = deficit.T @ resistance @ deficit
        self.deficit_form = (form + form.T) / 2.0
        form_spectrum = linalg.sym_eigen(self.deficit_form)
        largest = float(form_spectrum.eigenvalues[0])
        smallest = float(form_spectrum.eigenvalues[-1])
        if largest <= 0.0 or smallest <= linalg.default_rank_tol(s) * largest:
            raise linalg.NumericError(
                "deficit quadratic form is not positive definite "
                f"(smallest eigenvalue {smallest:.6e}); this indicates an "
                "upstream computation bug"
            )
        self.deficit_form_spectrum = form_spectrum

    # ------------------------------------------------------------------
    # lazily computed spectral objects

    @cached_property
    def laplacian_spectrum(self) -> linalg.SpectralDecomposition:
        return linalg.sym_eigen(self.laplacian.body)

    @cached_property
    def resistance_spectrum(self) -> linalg.SpectralDecomposition:
        return linalg.sym_eigen(self.resistance.body)

    @cached_property
    def shift_spectrum(self) -> linalg.SpectralDecomposition:
        return linalg.sym_eigen(self.shift_body)

    @cached_property
    def spectral_pseudoinverse(self) -> np.ndarray:
        """Laplacian pseudoinverse by the independent spectral route."""
        return linalg.pseudo_inverse_from(self.laplacian_spectrum)

    @cached_property
    def incidence(self) -> BlockMatrix:
        return build_incidence(self.graph)

    @cached_property
    def laplacian_cofactor_value(self) -> float:
        return laplacian_cofactor(self.graph, self.laplacian)

    @property
    def condition(self) -> float:
        """Condition number of the shifted Laplacian."""
        values = self.shift_spectrum.eigenvalues
        return float(values[0] / values[-1])

    @property
    def low_confidence(self) -> bool:
        """True when the shifted Laplacian's conditioning exceeds the
        reporting threshold; results are then flagged, never suppressed."""
        return self.condition > CONDITION_CONFIDENCE_LIMIT

    # ------------------------------------------------------------------
    # block access

    def resistance_block(self, i: int, j: int) -> np.ndarray:
        """The ``(i, j)`` resistance block (0-based), as a fresh array."""
        return self.resistance.block(i, j).copy()

    # ------------------------------------------------------------------
    # closed forms

    def deficit_form_closed(self) -> np.ndarray:
        """The deficit quadratic form by its non-obvious closed expression
        ``2 xbar' L xbar + (8/n) (sum_i X_ii - I_s)`` with
        ``xbar`` the stacked diagonal blocks of the shifted inverse."""
        n, s = self.graph.n, self.graph.s
        xbar = self.diag_stack
        total = np.zeros((s, s))
        for i in range(n):
            total += self.shifted_inverse.block(i, i)
        return 2.0 * xbar.T @ self.laplacian.body @ xbar + (8.0 / n) * (
            total - np.eye(s)
        )

    def determinant(self) -> float:
        """Determinant of the resistance matrix by the closed form
        ``(-1)^{(n-1)s} 2^{(n-3)s} det(T' R T) / c(G)``.

        Uses only LU determinants of small matrices plus one cofactor;
        no eigendecomposition.  Raises :class:`NumericError` if the
        Laplacian cofactor vanishes (impossible for a valid graph).
        """
        n, s = self.graph.n, self.graph.s
        cofactor = self.laplacian_cofactor_value
        if cofactor == 0.0:
            raise linalg.NumericError(
                "Laplacian cofactor is zero; the graph is not usably connected"
            )
        parity = -1.0 if ((n - 1) * s) % 2 else 1.0
        return (
            parity
            * 2.0 ** ((n - 3) * s)
            * linalg.det_lu(self.deficit_form)
            / cofactor
        )

    def determinant_slog(self) -> tuple[float, float]:
        """The closed-form determinant as ``(sign, log|det|)``, safe for
        sizes where the plain value would overflow."""
        n, s = self.graph.n, self.graph.s
        cof_sign, cof_log = laplacian_cofactor_slog(self.graph, self.laplacian)
        if cof_sign == 0.0:
            raise linalg.NumericError(
                "Laplacian cofactor is zero; the graph is not usably connected"
            )
        form_sign, form_log = linalg.slogdet_lu(self.deficit_form)
        parity = -1.0 if ((n - 1) * s) % 2 else 1.0
        sign = parity * form_sign * cof_sign
        return (sign, (n - 3) * s * math.log(2.0) + form_log - cof_log)

    def inverse(self) -> np.ndarray:
        """Inverse of the resistance matrix by the closed form
        ``-(1/2) L + T (T' R T)^{-1} T'`` (one tiny ``s x s`` solve)."""
        factor = linalg.lu_factor(self.deficit_form)
        middle = factor.solve(self.deficit.T)
        f = -0.5 * self.laplacian.body + self.deficit @ middle
        return (f + f.T) / 2.0

    def inertia(self, zero_tol: float | None = None) -> linalg.Inertia:
        """Eigenvalue sign counts of the resistance matrix (always
        ``(s, ns - s, 0)`` in exact arithmetic)."""
        return linalg.count_inertia(self.resistance_spectrum.eigenvalues, zero_tol)

    def interlacing(self, slack_rtol: float = 1e-9) -> list[InterlaceRow]:
        """The ``ns - s`` interlacing rows ``mu_{s+i} <= -2/lambda_i <= mu_i``
        over the positive Laplacian eigenvalues (descending)."""
        n, s = self.graph.n, self.graph.s
        count = n * s - s
        lam = self.laplacian_spectrum.eigenvalues
        mu = self.resistance_spectrum.eigenvalues
        rows = []
        for i in range(1, count + 1):
            lam_i = float(lam[i - 1])
            if lam_i <= 0.0:
                raise linalg.NumericError(
                    f"Laplacian eigenvalue {i} is not positive ({lam_i:.6e}); "
                    "rank deficiency exceeds the kernel dimension"
                )
            bound = -2.0 / lam_i
            lower = float(mu[s + i - 1])
            upper = float(mu[i - 1])
            slack = slack_rtol * (1.0 + abs(bound))
            holds = (lower <= bound + slack) and (bound <= upper + slack)
            rows.append(InterlaceRow(i, lower, bound, upper, holds))
        return rows
