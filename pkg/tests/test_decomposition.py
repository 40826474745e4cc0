from __future__ import annotations

from hypothesis import given, settings, strategies as st

from polarkit.decomposition import (
    CliqueDecomposition,
    nice_clique_decomposition,
    verify_decomposition,
)
from polarkit.graphs import Graph, complete_graph, disjoint_union, empty_graph, path_graph
from polarkit.random_graphs import Xorshift64Star, generate_random

from conftest import all_graphs


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    code = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


def test_triangle_plus_isolated():
    g = disjoint_union([complete_graph(3), empty_graph(1)])
    dec = nice_clique_decomposition(g)
    assert list(dec) == [("large", (0, 1, 2)), ("vertex", (3,))]
    assert verify_decomposition(g, dec) == (True, None)


def test_p3_gives_edge_then_vertex():
    dec = nice_clique_decomposition(path_graph(3))
    assert list(dec) == [("edge", (0, 1)), ("vertex", (2,))]


def test_edgeless():
    dec = nice_clique_decomposition(empty_graph(3))
    assert list(dec) == [("vertex", (0,)), ("vertex", (1,)), ("vertex", (2,))]


def test_empty_remainder():
    dec = nice_clique_decomposition(path_graph(3), excluded=(0, 1, 2))
    assert dec.r == 0


def test_verify_rejects_bad_order():
    g = complete_graph(4)
    dec = CliqueDecomposition(cliques=((0,), (1, 2, 3)), kinds=("vertex", "large"))
    ok, why = verify_decomposition(g, dec)
    assert not ok and "ordering" in why


def test_verify_rejects_nonmaximal():
    g = complete_graph(4)
    dec = CliqueDecomposition(cliques=((0, 1, 2), (3,)), kinds=("large", "vertex"))
    ok, why = verify_decomposition(g, dec)
    assert not ok and "maximality" in why


def test_verify_rejects_triangle_in_tail():
    g = complete_graph(3)
    dec = CliqueDecomposition(
        cliques=((0, 1), (2,)), kinds=("edge", "vertex")
    )
    ok, why = verify_decomposition(g, dec)
    # the tail {0,1,2} spans a triangle, but maximality already fails first
    assert not ok


def test_exhaustive_small():
    for n in range(0, 6):
        for g in all_graphs(n):
            dec = nice_clique_decomposition(g)
            assert verify_decomposition(g, dec) == (True, None)


@settings(max_examples=80, deadline=None)
@given(graphs(), st.integers(min_value=0, max_value=255))
def test_random_with_random_exclusions(g, code):
    excluded = tuple(v for v in range(g.n) if code >> v & 1)
    dec = nice_clique_decomposition(g, excluded=excluded)
    assert verify_decomposition(g, dec, excluded=excluded) == (True, None)


def test_larger_random_graphs():
    rng = Xorshift64Star(2024)
    for _ in range(40):
        n = 16 + rng.randrange(49)  # up to 64
        g = generate_random(n, 0.02 + 0.3 * rng.random(), rng.next_u64())
        dec = nice_clique_decomposition(g)
        assert verify_decomposition(g, dec) == (True, None)


def test_deterministic():
    rng = Xorshift64Star(5)
    for _ in range(20):
        g = generate_random(10, 0.4, rng.next_u64())
        assert list(nice_clique_decomposition(g)) == list(nice_clique_decomposition(g))
