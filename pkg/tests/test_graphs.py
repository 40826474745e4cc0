from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from polarkit.graphs import (
    Graph,
    GraphFormatError,
    GuardError,
    P3,
    PI_CLUSTER,
    PI_EDGELESS,
    PiSpec,
    complete_graph,
    disjoint_union,
    empty_graph,
    enumerate_induced_embeddings,
    induced_subgraph,
    is_cluster_graph,
    parse_graph,
    parse_pispec,
    path_graph,
    satisfies_pi,
    serialize_graph,
    serialize_pispec,
)

from conftest import all_graphs, random_graph_stream, subset_embeddings_oracle


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    code = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


class TestParse:
    def test_p3(self):
        g = parse_graph("3 2\n0 1\n1 2")
        assert g == path_graph(3)

    def test_single_isolated_vertex(self):
        g = parse_graph("1 0")
        assert g.n == 1 and g.m == 0

    def test_out_of_range_id_reports_line(self):
        with pytest.raises(GraphFormatError, match=r"vertex id out of range, line 2"):
            parse_graph("2 1\n0 2")

    def test_self_loop(self):
        with pytest.raises(GraphFormatError, match=r"self-loop, line 3"):
            parse_graph("3 2\n0 1\n2 2")

    def test_duplicate_edge(self):
        with pytest.raises(GraphFormatError, match=r"duplicate edge, line 3"):
            parse_graph("3 2\n0 1\n0 1")

    def test_malformed_header(self):
        with pytest.raises(GraphFormatError, match="malformed header"):
            parse_graph("3\n0 1")

    def test_comments_and_trailing_newline(self):
        g = parse_graph("# comment\n3 1\n# another\n0 2\n")
        assert g.edges == ((0, 2),)

    @settings(max_examples=60, deadline=None)
    @given(graphs())
    def test_roundtrip(self, g):
        assert parse_graph(serialize_graph(g)) == g


class TestInducedSubgraph:
    def test_p3_endpoints(self):
        sub, table = induced_subgraph(path_graph(3), (0, 2))
        assert sub.n == 2 and sub.m == 0
        assert table == (0, 2)

    def test_k3_edge(self):
        sub, _ = induced_subgraph(complete_graph(3), (0, 1))
        assert sub.edges == ((0, 1),)

    def test_empty_selection(self):
        sub, table = induced_subgraph(complete_graph(4), ())
        assert sub.n == 0 and table == ()

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(path_graph(3), (0, 5))


class TestEmbeddings:
    def test_p4_contains_two_p3(self):
        assert enumerate_induced_embeddings(path_graph(4), P3) == [
            (0, 1, 2),
            (1, 2, 3),
        ]

    def test_k3_is_p3_free(self):
        assert enumerate_induced_embeddings(complete_graph(3), P3) == []

    def test_star_p3s(self):
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert enumerate_induced_embeddings(star, P3) == [
            (0, 1, 2),
            (0, 1, 3),
            (0, 2, 3),
        ]

    def test_limit(self):
        assert enumerate_induced_embeddings(path_graph(4), P3, limit=1) == [(0, 1, 2)]

    def test_pattern_too_large(self):
        with pytest.raises(GuardError, match="pattern too large"):
            enumerate_induced_embeddings(complete_graph(9), path_graph(9))

    @pytest.mark.parametrize("pattern", [P3, path_graph(4), complete_graph(3)])
    def test_against_subset_oracle_small(self, pattern):
        for g in all_graphs(4):
            assert enumerate_induced_embeddings(g, pattern) == subset_embeddings_oracle(
                g, pattern
            )

    def test_against_subset_oracle_random(self):
        paw = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
        for g in random_graph_stream(seed=11, count=40, n_lo=5, n_hi=8):
            for pattern in (P3, path_graph(4), paw):
                assert enumerate_induced_embeddings(
                    g, pattern
                ) == subset_embeddings_oracle(g, pattern)


class TestClusterAndPi:
    def test_p3_not_cluster(self):
        assert is_cluster_graph(P3) == (False, None)

    def test_k3_cluster(self):
        assert is_cluster_graph(complete_graph(3)) == (True, 1)

    def test_two_edges(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert is_cluster_graph(g) == (True, 2)

    def test_empty_graph_zero_clusters(self):
        assert is_cluster_graph(empty_graph(0)) == (True, 0)

    @settings(max_examples=60, deadline=None)
    @given(graphs())
    def test_cluster_iff_no_p3(self, g):
        assert is_cluster_graph(g)[0] == (
            enumerate_induced_embeddings(g, P3) == []
        )

    def test_edgeless_is_p3_free(self):
        assert satisfies_pi(empty_graph(4), PI_CLUSTER)

    def test_p3_has_an_edge(self):
        assert not satisfies_pi(P3, PiSpec((path_graph(2),)))

    def test_degree_bound(self):
        assert not satisfies_pi(complete_graph(3), PiSpec((), max_degree=1))

    def test_patterns_must_be_connected(self):
        with pytest.raises(ValueError):
            PiSpec((empty_graph(2),))


class TestPiSpecFormat:
    def test_roundtrip(self):
        pi = PiSpec((P3, complete_graph(3)), max_degree=2)
        again = parse_pispec(serialize_pispec(pi))
        assert again.max_degree == 2
        assert [p.edges for p in again.patterns] == [p.edges for p in pi.patterns]

    def test_delta_values(self):
        assert parse_pispec("delta none\npatterns 0\n").max_degree is None
        assert parse_pispec("delta 3\npatterns 0\n").max_degree == 3
        assert parse_pispec(serialize_pispec(PI_EDGELESS)).max_degree == 0

    def test_bad_file(self):
        with pytest.raises(GraphFormatError):
            parse_pispec("patterns 1\n")
