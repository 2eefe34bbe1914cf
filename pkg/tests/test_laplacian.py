"""Tests for the block Laplacian, incidence matrix, and Laplacian cofactor."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from resmat.graph import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_graph,
    star_graph,
)
from resmat.laplacian import (
    BlockMatrix,
    build_incidence,
    build_laplacian,
    laplacian_cofactor,
    laplacian_cofactor_slog,
    stacked_identity,
)
from resmat.linalg import DimensionError, kron, max_norm, pd_inverse, sym_eigen


class TestBlockMatrix:
    def test_block_views(self):
        bm = BlockMatrix(np.arange(16.0).reshape(4, 4), 2)
        assert np.array_equal(bm.block(0, 1), [[2.0, 3.0], [6.0, 7.0]])
        assert (bm.row_blocks, bm.col_blocks, bm.n) == (2, 2, 2)

    def test_body_read_only(self):
        bm = BlockMatrix(np.eye(2), 1)
        with pytest.raises(ValueError):
            bm.body[0, 0] = 5.0

    def test_body_copied(self):
        src = np.eye(2)
        bm = BlockMatrix(src, 1)
        src[0, 0] = 9.0
        assert bm.body[0, 0] == 1.0

    def test_rectangular_allowed(self):
        bm = BlockMatrix(np.zeros((4, 6)), 2)
        assert (bm.row_blocks, bm.col_blocks) == (2, 3)
        with pytest.raises(DimensionError, match="not square"):
            bm.n

    def test_rejects_indivisible_shape(self):
        with pytest.raises(DimensionError, match="multiple"):
            BlockMatrix(np.zeros((3, 3)), 2)

    def test_rejects_bad_block_size(self):
        with pytest.raises(DimensionError):
            BlockMatrix(np.zeros((2, 2)), 0)

    def test_block_out_of_range(self):
        bm = BlockMatrix(np.eye(2), 1)
        with pytest.raises(DimensionError, match="out of range"):
            bm.block(2, 0)


class TestStackedIdentity:
    def test_shape_and_content(self):
        ones = stacked_identity(3, 2)
        assert ones.shape == (6, 2)
        assert np.array_equal(ones, kron(np.ones((3, 1)), np.eye(2)))


class TestBuildLaplacian:
    def test_two_vertex_unit(self):
        lap = build_laplacian(path_graph(2))
        assert np.array_equal(lap.body, [[1.0, -1.0], [-1.0, 1.0]])

    def test_path3_unit(self):
        lap = build_laplacian(path_graph(3))
        expected = np.array(
            [[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]]
        )
        assert np.array_equal(lap.body, expected)

    def test_off_diagonal_is_negated_inverse_weight(self):
        w = np.array([[2.0, 1.0], [1.0, 2.0]])
        lap = build_laplacian(path_graph(2, 2, w))
        assert max_norm(lap.block(0, 1) + pd_inverse(w)) <= 1e-15

    def test_diagonal_is_bitwise_negated_row_sum(self):
        g = random_graph(6, 3, "complete", seed=99)
        s = g.s
        lap = build_laplacian(g)
        for i in range(g.n):
            total = np.zeros((s, s))
            for j in range(g.n):
                if j != i:
                    total -= lap.block(i, j)
            assert np.array_equal(lap.block(i, i), total)

    def test_block_row_sums_vanish(self):
        g = random_graph(6, 3, "complete", seed=99)
        lap = build_laplacian(g)
        ones = stacked_identity(g.n, g.s)
        tol = 1e-13 * (1.0 + max_norm(lap.body))
        assert max_norm(lap.body @ ones) <= tol
        assert max_norm(ones.T @ lap.body) <= tol

    def test_symmetric(self):
        g = random_graph(5, 2, "gnp", seed=3, p=0.7)
        lap = build_laplacian(g)
        assert np.array_equal(lap.body, lap.body.T)

    def test_positive_semidefinite_with_s_dim_kernel(self):
        g = random_graph(5, 2, "tree", seed=21)
        lap = build_laplacian(g)
        values = sym_eigen(lap.body).eigenvalues
        scale = float(values[0])
        assert float(values[-1]) >= -1e-12 * scale
        near_zero = np.sum(np.abs(values) <= 1e-10 * scale)
        assert near_zero == g.s

    def test_unit_weights_reduce_to_scalar_laplacian(self):
        g = cycle_graph(4, 3)
        scalar = build_laplacian(cycle_graph(4)).body
        lap = build_laplacian(g)
        assert np.array_equal(lap.body, kron(scalar, np.eye(3)))


class TestBuildIncidence:
    def test_shape(self):
        g = complete_graph(4, 2)
        q = build_incidence(g)
        assert q.body.shape == (8, 12)
        assert (q.row_blocks, q.col_blocks) == (4, 6)

    def test_two_vertex_unit(self):
        q = build_incidence(path_graph(2))
        assert np.array_equal(q.body, [[1.0], [-1.0]])

    def test_column_blocks_carry_inverse_sqrt(self):
        w = np.array([[4.0]])
        q = build_incidence(path_graph(2, 1, w))
        assert np.array_equal(q.body, [[0.5], [-0.5]])

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_l_equals_q_qt(self, seed):
        g = random_graph(6, 2, "gnp", seed=seed, p=0.6)
        lap = build_laplacian(g)
        q = build_incidence(g)
        gap = max_norm(q.body @ q.body.T - lap.body)
        assert gap <= 1e-12 * (1.0 + max_norm(lap.body))

    def test_column_sums_vanish(self):
        g = random_graph(5, 3, "tree", seed=8)
        q = build_incidence(g)
        ones = stacked_identity(g.n, g.s)
        assert max_norm(ones.T @ q.body) <= 1e-13

    @settings(deadline=None, max_examples=10)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_l_equals_q_qt_property(self, seed):
        g = random_graph(5, 2, "tree", seed=seed)
        lap = build_laplacian(g)
        q = build_incidence(g)
        gap = max_norm(q.body @ q.body.T - lap.body)
        assert gap <= 1e-12 * (1.0 + max_norm(lap.body))


class TestLaplacianCofactor:
    def test_tree_unit_weights_is_one(self):
        # Every block cofactor of a unit-weight tree Laplacian counts its
        # single spanning tree.
        for g in (path_graph(2), path_graph(5), star_graph(4)):
            assert laplacian_cofactor(g) == pytest.approx(1.0, rel=1e-12)

    def test_counts_spanning_trees(self):
        # Cayley: K_n has n^(n-2) spanning trees; C_n has n.
        assert laplacian_cofactor(complete_graph(4)) == pytest.approx(16.0, rel=1e-12)
        assert laplacian_cofactor(complete_graph(5)) == pytest.approx(125.0, rel=1e-12)
        assert laplacian_cofactor(cycle_graph(5)) == pytest.approx(5.0, rel=1e-12)

    def test_matrix_weights_blockwise(self):
        # For one edge with weight W the cofactor is det(W^{-1}).
        w = np.array([[2.0, 1.0], [1.0, 2.0]])
        value = laplacian_cofactor(path_graph(2, 2, w))
        assert value == pytest.approx(1.0 / 3.0, rel=1e-12)

    def test_accepts_prebuilt_laplacian(self):
        g = cycle_graph(4)
        lap = build_laplacian(g)
        assert laplacian_cofactor(g, lap) == laplacian_cofactor(g)

    def test_all_block_cofactors_equal(self):
        from resmat.linalg import block_cofactor

        g = random_graph(5, 2, "gnp", seed=17, p=0.7)
        lap = build_laplacian(g)
        reference = block_cofactor(lap.body, 0, 0, g.s)
        for i in range(g.n):
            for j in range(g.n):
                value = block_cofactor(lap.body, i, j, g.s)
                assert value == pytest.approx(reference, rel=1e-9)

    def test_slog_matches_plain(self):
        import math

        g = random_graph(6, 2, "complete", seed=31)
        sign, log_abs = laplacian_cofactor_slog(g)
        plain = laplacian_cofactor(g)
        assert sign * math.exp(log_abs) == pytest.approx(plain, rel=1e-10)

    def test_positive_for_valid_graphs(self):
        for seed in range(4):
            g = random_graph(5, 2, "tree", seed=seed)
            assert laplacian_cofactor(g) > 0.0
