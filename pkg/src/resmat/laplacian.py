"""Block Laplacian, weighted incidence matrix, and the Laplacian cofactor.

For a graph on ``n`` vertices with ``s x s`` positive definite edge weights
``W_e``, the Laplacian is the ``ns x ns`` symmetric block matrix whose off-
diagonal block for each edge is ``-W_e^{-1}`` and whose diagonal block at
each vertex is the bitwise negated sum (accumulated in ascending neighbor
order) of the off-diagonal blocks in its block row, so block row and column
sums vanish up to a reordering of identical floating-point terms.  The weighted incidence matrix ``Q`` is ``ns x ms`` with block
column ``e`` holding ``+W_e^{-1/2}`` at the edge's origin and
``-W_e^{-1/2}`` at its terminus; it satisfies ``L = Q Q'`` and its products
with its own transpose do not depend on the chosen orientations.

The Laplacian cofactor (the common value of every block cofactor of ``L``)
generalizes the spanning tree count: for ``s = 1`` unit weights it *is* the
number of spanning trees.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .graph import MatrixWeightedGraph, adjacency

__all__ = [
    "BlockMatrix",
    "stacked_identity",
    "build_laplacian",
    "build_incidence",
    "laplacian_cofactor",
    "laplacian_cofactor_slog",
]


@dataclass(frozen=True)
class BlockMatrix:
    """A dense matrix viewed as a grid of ``s x s`` blocks.

    The body is stored read-only; :meth:`block` returns (read-only) views.
    Rectangular bodies are allowed as long as both dimensions are multiples
    of ``s``.
    """

    body: np.ndarray
    s: int

    def __post_init__(self):
        body = np.asarray(self.body, dtype=np.float64)
        if body.ndim != 2:
            raise linalg.DimensionError("block matrix body must be 2-D")
        if self.s < 1:
            raise linalg.DimensionError(f"block size must be >= 1, got {self.s}")
        if body.shape[0] % self.s or body.shape[1] % self.s:
            raise linalg.DimensionError(
                f"body shape {body.shape} is not a multiple of block size {self.s}"
            )
        body = body.copy()
        body.setflags(write=False)
        object.__setattr__(self, "body", body)

    @property
    def row_blocks(self) -> int:
        return self.body.shape[0] // self.s

    @property
    def col_blocks(self) -> int:
        return self.body.shape[1] // self.s

    @property
    def n(self) -> int:
        """Block order of a square block matrix."""
        if self.row_blocks != self.col_blocks:
            raise linalg.DimensionError(
                f"block matrix is not square: {self.row_blocks} x {self.col_blocks}"
            )
        return self.row_blocks

    def block(self, i: int, j: int) -> np.ndarray:
        """The ``(i, j)`` block (0-based), as a read-only view."""
        if not (0 <= i < self.row_blocks and 0 <= j < self.col_blocks):
            raise linalg.DimensionError(
                f"block ({i}, {j}) out of range for "
                f"{self.row_blocks} x {self.col_blocks} blocks"
            )
        s = self.s
        return self.body[i * s : (i + 1) * s, j * s : (j + 1) * s]


def stacked_identity(n: int, s: int) -> np.ndarray:
    """The ``ns x s`` block column of ``n`` stacked identity blocks
    (the all-ones vector Kronecker the ``s x s`` identity)."""
    return np.tile(np.eye(s), (n, 1))


def build_laplacian(g: MatrixWeightedGraph) -> BlockMatrix:
    """Assemble the block Laplacian of a matrix-weighted graph.

    Off-diagonal blocks are the negated inverse weights; each diagonal block
    is assembled as the negated sum of the off-diagonal blocks in its block
    row, accumulated in ascending neighbor order.  That makes the diagonal
    reproducible bitwise, and block row and column sums cancel up to a
    reordering of identical floating-point terms (residuals at the level of
    the last place, far below any tolerance used downstream).
    """
    n, s = g.n, g.s
    body = np.zeros((n * s, n * s))
    inverse_weights = [linalg.pd_inverse(e.weight) for e in g.edges]
    for e in g.edges:
        wi = inverse_weights[e.index]
        body[e.u * s : (e.u + 1) * s, e.v * s : (e.v + 1) * s] = -wi
        body[e.v * s : (e.v + 1) * s, e.u * s : (e.u + 1) * s] = -wi
    for i, incident in enumerate(adjacency(g)):
        total = np.zeros((s, s))
        for j, _ in incident:
            total -= body[i * s : (i + 1) * s, j * s : (j + 1) * s]
        body[i * s : (i + 1) * s, i * s : (i + 1) * s] = total
    return BlockMatrix(body, s)


def build_incidence(g: MatrixWeightedGraph) -> BlockMatrix:
    """Assemble the weighted incidence matrix ``Q`` with ``L = Q Q'``.

    Block column ``e`` carries ``+W_e^{-1/2}`` at the edge's origin (its
    smaller endpoint) and ``-W_e^{-1/2}`` at its terminus.  Flipping an
    orientation negates one block column, which conjugates ``Q' A Q`` by a
    diagonal sign matrix and leaves ``Q Q'`` bitwise unchanged, so every
    identity checked downstream is orientation-independent.
    """
    n, s, m = g.n, g.s, g.m
    body = np.zeros((n * s, m * s))
    for e in g.edges:
        root = linalg.pd_inverse_sqrt(e.weight)
        body[e.u * s : (e.u + 1) * s, e.index * s : (e.index + 1) * s] = root
        body[e.v * s : (e.v + 1) * s, e.index * s : (e.index + 1) * s] = -root
    return BlockMatrix(body, s)


def laplacian_cofactor(
    g: MatrixWeightedGraph, laplacian: BlockMatrix | None = None
) -> float:
    """The block cofactor of the Laplacian's (0, 0) block.

    Because the Laplacian has exactly vanishing block row and column sums,
    every block cofactor of it takes this same value; the (0, 0) choice is
    the canonical evaluation point.
    """
    if laplacian is None:
        laplacian = build_laplacian(g)
    return linalg.block_cofactor(laplacian.body, 0, 0, g.s)


def laplacian_cofactor_slog(
    g: MatrixWeightedGraph, laplacian: BlockMatrix | None = None
) -> tuple[float, float]:
    """Laplacian cofactor as ``(sign, log|value|)``; overflow-safe."""
    if laplacian is None:
        laplacian = build_laplacian(g)
    return linalg.block_cofactor_slog(laplacian.body, 0, 0, g.s)
