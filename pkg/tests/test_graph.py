"""Tests for graph construction, validation, JSON interchange, generation."""

import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from resmat.graph import (
    GNP_MAX_ATTEMPTS,
    RANDOM_MODELS,
    Edge,
    GenerationError,
    GraphError,
    MatrixWeightedGraph,
    adjacency,
    complete_graph,
    cycle_graph,
    degree,
    from_edges,
    has_unit_weights,
    is_tree,
    parse_graph,
    path_graph,
    random_graph,
    random_pd_weight,
    serialize,
    star_graph,
    validate,
    validation_report,
)
from resmat.linalg import sym_eigen


def unit(s=1):
    return np.eye(s)


class TestValidation:
    def test_valid_path(self):
        report = validation_report(2, 1, [(0, 1, unit())])
        assert report.ok
        assert report.problems == ()

    @pytest.mark.parametrize("n", [1, 0, -2, 2.0, True, "3"])
    def test_bad_vertex_count(self, n):
        report = validation_report(n, 1, [])
        assert not report.ok
        assert "vertex count" in report.problems[0]

    @pytest.mark.parametrize("s", [0, -1, 1.5, False])
    def test_bad_block_size(self, s):
        report = validation_report(2, s, [(0, 1, unit())])
        assert not report.ok
        assert "block size" in report.problems[0]

    def test_endpoint_out_of_range(self):
        report = validation_report(2, 1, [(0, 5, unit())])
        assert any("out of range" in p for p in report.problems)

    def test_self_loop(self):
        report = validation_report(2, 1, [(1, 1, unit())])
        assert any("self-loop at vertex 2" in p for p in report.problems)

    def test_reversed_endpoints(self):
        report = validation_report(2, 1, [(1, 0, unit())])
        assert any("u < v" in p for p in report.problems)

    def test_duplicate_edge(self):
        report = validation_report(2, 1, [(0, 1, unit()), (0, 1, 2 * unit())])
        assert any("duplicate" in p for p in report.problems)

    def test_wrong_weight_shape(self):
        report = validation_report(2, 2, [(0, 1, unit(1))])
        assert any("shape" in p for p in report.problems)

    def test_non_finite_weight(self):
        report = validation_report(2, 1, [(0, 1, [[np.nan]])])
        assert any("non-finite" in p for p in report.problems)

    def test_asymmetric_weight(self):
        w = [[1.0, 0.5], [0.0, 1.0]]
        report = validation_report(2, 2, [(0, 1, w)])
        assert any("not symmetric" in p for p in report.problems)

    def test_indefinite_weight(self):
        w = [[1.0, 2.0], [2.0, 1.0]]
        report = validation_report(2, 2, [(0, 1, w)])
        assert any("not positive definite" in p for p in report.problems)

    def test_singular_weight(self):
        w = [[1.0, 1.0], [1.0, 1.0]]
        report = validation_report(2, 2, [(0, 1, w)])
        assert any("not positive definite" in p for p in report.problems)

    def test_disconnected(self):
        report = validation_report(4, 1, [(0, 1, unit()), (2, 3, unit())])
        assert report.problems == ("graph is not connected",)

    def test_no_edges_disconnected(self):
        report = validation_report(2, 1, [])
        assert not report.ok

    def test_multiple_problems_all_reported(self):
        report = validation_report(3, 1, [(0, 0, unit()), (1, 0, unit())])
        assert len(report.problems) == 2

    def test_one_based_labels_in_messages(self):
        report = validation_report(3, 1, [(0, 3, unit())])
        assert "(1, 4)" in report.problems[0]

    def test_validate_roundtrip(self):
        g = path_graph(3)
        assert validate(g).ok


class TestFromEdges:
    def test_sorts_edges_canonically(self):
        g = from_edges(3, 1, [(1, 2, unit()), (0, 1, unit())])
        assert [(e.u, e.v) for e in g.edges] == [(0, 1), (1, 2)]
        assert [e.index for e in g.edges] == [0, 1]

    def test_raises_with_all_problems(self):
        with pytest.raises(GraphError) as exc:
            from_edges(3, 1, [(0, 0, unit()), (2, 1, unit())])
        assert "self-loop" in str(exc.value)
        assert "u < v" in str(exc.value)

    def test_weights_symmetrized_and_frozen(self):
        w = np.array([[2.0, 1.0 + 1e-13], [1.0, 2.0]])
        g = from_edges(2, 2, [(0, 1, w)])
        stored = g.edges[0].weight
        assert np.array_equal(stored, stored.T)
        with pytest.raises(ValueError):
            stored[0, 0] = 9.0

    def test_equality_is_structural(self):
        a = path_graph(3, 2, np.array([[2.0, 0.0], [0.0, 1.0]]))
        b = path_graph(3, 2, np.array([[2.0, 0.0], [0.0, 1.0]]))
        c = path_graph(3, 2, np.array([[3.0, 0.0], [0.0, 1.0]]))
        assert a == b
        assert a != c
        assert a != "graph"
        with pytest.raises(TypeError):
            hash(a)


class TestParseSerialize:
    def test_minimal_document(self):
        g = parse_graph('{"n": 2, "s": 1, "edges": [{"u": 1, "v": 2, "w": [[1.0]]}]}')
        assert (g.n, g.s, g.m) == (2, 1, 1)
        assert g.edges[0].weight[0, 0] == 1.0

    def test_accepts_bytes(self):
        text = serialize(path_graph(2))
        assert parse_graph(text.encode()) == path_graph(2)

    def test_invalid_json(self):
        with pytest.raises(GraphError, match="invalid JSON"):
            parse_graph("{nope")

    def test_top_level_not_object(self):
        with pytest.raises(GraphError, match="top level"):
            parse_graph("[1, 2]")

    def test_missing_keys(self):
        with pytest.raises(GraphError, match="missing required"):
            parse_graph('{"n": 2}')

    def test_unexpected_keys(self):
        with pytest.raises(GraphError, match="unexpected key"):
            parse_graph('{"n": 2, "s": 1, "edges": [], "name": "x"}')

    @pytest.mark.parametrize("n", ['"2"', "2.0", "true"])
    def test_non_integer_n(self, n):
        with pytest.raises(GraphError, match="must be an integer"):
            parse_graph(f'{{"n": {n}, "s": 1, "edges": []}}')

    def test_edges_not_list(self):
        with pytest.raises(GraphError, match="edges must be a list"):
            parse_graph('{"n": 2, "s": 1, "edges": {}}')

    def test_edge_wrong_keys(self):
        with pytest.raises(GraphError, match="exactly"):
            parse_graph('{"n": 2, "s": 1, "edges": [{"u": 1, "v": 2}]}')

    def test_edge_extra_key(self):
        doc = '{"n": 2, "s": 1, "edges": [{"u": 1, "v": 2, "w": [[1.0]], "x": 0}]}'
        with pytest.raises(GraphError, match="exactly"):
            parse_graph(doc)

    def test_edge_non_integer_endpoint(self):
        doc = '{"n": 2, "s": 1, "edges": [{"u": 1.0, "v": 2, "w": [[1.0]]}]}'
        with pytest.raises(GraphError, match="must be an integer"):
            parse_graph(doc)

    def test_edge_weight_not_nested_list(self):
        doc = '{"n": 2, "s": 1, "edges": [{"u": 1, "v": 2, "w": [1.0]}]}'
        with pytest.raises(GraphError, match="nested list"):
            parse_graph(doc)

    def test_edge_ragged_weight(self):
        doc = '{"n": 2, "s": 2, "edges": [{"u": 1, "v": 2, "w": [[1.0], [1.0, 2.0]]}]}'
        with pytest.raises(GraphError, match="malformed weight"):
            parse_graph(doc)

    def test_one_based_endpoints(self):
        doc = '{"n": 2, "s": 1, "edges": [{"u": 0, "v": 1, "w": [[1.0]]}]}'
        with pytest.raises(GraphError, match="out of range"):
            parse_graph(doc)

    def test_roundtrip_bitwise(self):
        g = random_graph(5, 3, "complete", seed=42)
        again = parse_graph(serialize(g))
        assert again == g
        for a, b in zip(g.edges, again.edges):
            assert a.weight.tobytes() == b.weight.tobytes()

    def test_serialize_deterministic(self):
        g = random_graph(4, 2, "tree", seed=7)
        h = random_graph(4, 2, "tree", seed=7)
        assert serialize(g) == serialize(h)

    def test_serialize_sorted_keys(self):
        text = serialize(path_graph(2))
        data = json.loads(text)
        assert list(data) == ["edges", "n", "s"]


class TestStructure:
    def test_adjacency(self):
        g = star_graph(3)
        table = adjacency(g)
        assert table[0] == [(1, 0), (2, 1), (3, 2)]
        assert table[1] == [(0, 0)]

    def test_degree(self):
        g = star_graph(3)
        assert degree(g, 0) == 3
        assert all(degree(g, v) == 1 for v in (1, 2, 3))

    def test_is_tree(self):
        assert is_tree(path_graph(4))
        assert is_tree(star_graph(5))
        assert not is_tree(cycle_graph(4))
        assert not is_tree(complete_graph(3))

    def test_has_unit_weights(self):
        assert has_unit_weights(path_graph(3, 2))
        w = 2.0 * np.eye(2)
        assert not has_unit_weights(path_graph(3, 2, w))


class TestFactories:
    def test_path(self):
        g = path_graph(4)
        assert (g.n, g.m) == (4, 3)
        assert [(e.u, e.v) for e in g.edges] == [(0, 1), (1, 2), (2, 3)]

    def test_cycle(self):
        g = cycle_graph(4)
        assert (g.n, g.m) == (4, 4)
        assert [(e.u, e.v) for e in g.edges] == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_cycle_too_small(self):
        with pytest.raises(GraphError, match="n >= 3"):
            cycle_graph(2)

    def test_complete(self):
        g = complete_graph(4)
        assert (g.n, g.m) == (4, 6)

    def test_star(self):
        g = star_graph(4)
        assert (g.n, g.m) == (5, 4)
        assert all(e.u == 0 for e in g.edges)

    def test_star_needs_ray(self):
        with pytest.raises(GraphError, match="at least one ray"):
            star_graph(0)

    def test_shared_weight(self):
        w = np.array([[2.0, 1.0], [1.0, 2.0]])
        g = path_graph(3, 2, w)
        for e in g.edges:
            assert np.array_equal(e.weight, w)
        # The shared array is copied, not aliased.
        w[0, 0] = 99.0
        assert g.edges[0].weight[0, 0] == 2.0

    def test_per_edge_weights(self):
        weights = [np.array([[2.0]]), np.array([[3.0]])]
        g = path_graph(3, 1, weights)
        assert g.edges[0].weight[0, 0] == 2.0
        assert g.edges[1].weight[0, 0] == 3.0

    def test_weight_count_mismatch(self):
        with pytest.raises(GraphError, match="expected 2 weights"):
            path_graph(3, 1, [np.eye(1)])


class TestRandom:
    def test_model_list(self):
        assert RANDOM_MODELS == ("tree", "cycle", "complete", "gnp")

    @pytest.mark.parametrize("model", ["tree", "cycle", "complete"])
    def test_deterministic(self, model):
        a = random_graph(6, 2, model, seed=123)
        b = random_graph(6, 2, model, seed=123)
        assert a == b

    def test_gnp_deterministic(self):
        a = random_graph(6, 1, "gnp", seed=5, p=0.5)
        b = random_graph(6, 1, "gnp", seed=5, p=0.5)
        assert a == b

    def test_different_seeds_differ(self):
        a = random_graph(6, 2, "tree", seed=1)
        b = random_graph(6, 2, "tree", seed=2)
        assert a != b

    def test_tree_shape(self):
        g = random_graph(8, 1, "tree", seed=0)
        assert is_tree(g)

    def test_cycle_shape(self):
        g = random_graph(5, 1, "cycle", seed=0)
        assert g.m == 5

    def test_complete_shape(self):
        g = random_graph(5, 1, "complete", seed=0)
        assert g.m == 10

    def test_gnp_connected(self):
        for seed in range(5):
            g = random_graph(7, 1, "gnp", seed=seed, p=0.4)
            assert validate(g).ok

    def test_gnp_requires_p(self):
        with pytest.raises(GraphError, match="requires an edge probability"):
            random_graph(5, 1, "gnp", seed=0)

    def test_gnp_p_range(self):
        with pytest.raises(GraphError, match="must be in"):
            random_graph(5, 1, "gnp", seed=0, p=1.5)

    def test_non_gnp_rejects_p(self):
        with pytest.raises(GraphError, match="does not take"):
            random_graph(5, 1, "tree", seed=0, p=0.5)

    def test_unknown_model(self):
        with pytest.raises(GraphError, match="unknown model"):
            random_graph(5, 1, "wheel", seed=0)

    def test_bad_n(self):
        with pytest.raises(GraphError, match="vertex count"):
            random_graph(1, 1, "tree", seed=0)

    def test_bad_s(self):
        with pytest.raises(GraphError, match="block size"):
            random_graph(4, 0, "tree", seed=0)

    def test_cycle_model_too_small(self):
        with pytest.raises(GraphError, match="n >= 3"):
            random_graph(2, 1, "cycle", seed=0)

    def test_gnp_impossible_raises_generation_error(self):
        # p = 0 can never produce a connected graph on n >= 2 vertices.
        with pytest.raises(GenerationError, match=str(GNP_MAX_ATTEMPTS)):
            random_graph(4, 1, "gnp", seed=0, p=0.0)

    @settings(deadline=None, max_examples=20)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1),
           s=st.integers(min_value=1, max_value=4))
    def test_random_weights_positive_definite(self, seed, s):
        rng = np.random.default_rng(seed)
        w = random_pd_weight(rng, s)
        values = sym_eigen(w).eigenvalues
        assert float(values[-1]) >= 0.1 * s

    @settings(deadline=None, max_examples=15)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1),
           n=st.integers(min_value=2, max_value=9),
           s=st.integers(min_value=1, max_value=3))
    def test_random_tree_always_valid(self, seed, n, s):
        g = random_graph(n, s, "tree", seed=seed)
        assert is_tree(g)
        assert validate(g).ok


class TestEdgeDataclass:
    def test_edges_are_identity_compared(self):
        a = Edge(0, 1, np.eye(1), 0)
        b = Edge(0, 1, np.eye(1), 0)
        assert a != b
        assert a == a

    def test_graph_m_property(self):
        g = MatrixWeightedGraph(2, 1, (Edge(0, 1, np.eye(1), 0),))
        assert g.m == 1
