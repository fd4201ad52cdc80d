import random

import pytest

from incdepth import (BipartiteGraph, InclusionMatrix, IntMatrix, MatrixError,
                      black_diameter, build_graph, min_depth,
                      min_even_depth_graph, min_hdepth, min_hdepth_graph,
                      min_odd_depth_graph, to_dot)

from _oracles import random_inclusion

S3S4 = InclusionMatrix([[1, 1, 0, 0, 0], [0, 1, 1, 1, 0], [0, 0, 0, 1, 1]])
C2M2 = InclusionMatrix([[1], [1]])
IDENT2 = InclusionMatrix(IntMatrix.identity(2))


def test_build_graph_edges_are_support():
    g = build_graph(S3S4)
    assert g.black_count == 3 and g.white_count == 5
    assert g.edges == frozenset(
        {(0, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3), (2, 4)})


def test_build_graph_flattens_multiplicities():
    assert build_graph(InclusionMatrix([[3, 2], [0, 1]])).edges == frozenset(
        {(0, 0), (0, 1), (1, 1)})


def test_build_graph_small_cases():
    assert build_graph(IDENT2).edges == frozenset({(0, 0), (1, 1)})
    assert build_graph(C2M2).edges == frozenset({(0, 0), (1, 0)})


def test_edge_range_validated():
    with pytest.raises(MatrixError, match="out of range"):
        BipartiteGraph(1, 1, [(0, 1)])


class TestDiameters:
    def test_s3s4_black_diameter(self):
        assert black_diameter(build_graph(S3S4)) == 4

    def test_column_pair_black_diameter(self):
        # b1 - w - b2
        assert black_diameter(build_graph(C2M2)) == 2

    def test_identity_disconnected(self):
        assert black_diameter(build_graph(IDENT2)) == 0

    def test_parity_of_distances(self):
        rng = random.Random(11)
        for _ in range(50):
            g = build_graph(random_inclusion(rng, max_dim=6))
            r = g.black_count
            for b in range(r):
                dist = g.distances_from(b)
                for other in range(r):
                    if dist[other] >= 0:
                        assert dist[other] % 2 == 0
                for w in range(g.white_count):
                    if dist[r + w] >= 0:
                        assert dist[r + w] % 2 == 1


class TestGraphDepths:
    def test_s3s4(self):
        g = build_graph(S3S4)
        assert min_odd_depth_graph(g) == 5
        assert min_even_depth_graph(g) == 6
        assert min_hdepth_graph(g) == 7

    def test_column_pair(self):
        g = build_graph(C2M2)
        assert min_odd_depth_graph(g) == 3
        assert min_even_depth_graph(g) == 2
        assert min_hdepth_graph(g) == 1

    def test_identity(self):
        g = build_graph(IDENT2)
        assert min_odd_depth_graph(g) == 1
        assert min_even_depth_graph(g) == 2
        assert min_hdepth_graph(g) == 1  # whites in distinct components

    def test_parities(self):
        rng = random.Random(12)
        for _ in range(60):
            g = build_graph(random_inclusion(rng, max_dim=6))
            assert min_odd_depth_graph(g) % 2 == 1
            assert min_even_depth_graph(g) % 2 == 0
            assert min_hdepth_graph(g) % 2 == 1

    def test_agrees_with_matrix_method(self):
        rng = random.Random(13)
        for _ in range(150):
            m = random_inclusion(rng, max_dim=6)
            g = build_graph(m)
            assert min(min_odd_depth_graph(g), min_even_depth_graph(g)) == min_depth(m)
            assert min_hdepth_graph(g) == min_hdepth(m)

    def test_block_diagonal_agreement(self):
        # disconnected graph: depth comes from within components
        m = InclusionMatrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1]])
        g = build_graph(m)
        assert min(min_odd_depth_graph(g), min_even_depth_graph(g)) == min_depth(m)
        assert min_hdepth_graph(g) == min_hdepth(m)


class TestDot:
    def test_column_pair_edges(self):
        dot = to_dot(build_graph(C2M2))
        assert "b1 -- w1;" in dot
        assert "b2 -- w1;" in dot
        assert dot.count("--") == 2

    def test_identity_two_edges(self):
        assert to_dot(build_graph(IDENT2)).count("--") == 2

    def test_s3s4_seven_edges(self):
        dot = to_dot(build_graph(S3S4))
        assert dot.count("--") == 7
        assert dot.startswith("graph inclusion {")
        assert dot.endswith("}\n")

    def test_deterministic_and_ordered(self):
        g = build_graph(S3S4)
        first = to_dot(g)
        assert first == to_dot(g)
        lines = first.splitlines()
        names = [ln.split()[0] for ln in lines if "[shape" in ln]
        assert names == ["b1", "b2", "b3", "w1", "w2", "w3", "w4", "w5"]
        edges = [ln.strip() for ln in lines if "--" in ln]
        assert edges == sorted(edges)
