"""Shared test helpers: deterministic random graphs and independent oracles
used to cross-check the library's outputs."""

from __future__ import annotations

from itertools import combinations

from polarkit.graphs import (
    Graph,
    has_induced,
    induced_subgraph,
    is_cluster_graph,
    satisfies_pi,
)
from polarkit.random_graphs import Xorshift64Star, generate_random


def all_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


def random_graph_stream(seed: int, count: int, n_lo: int, n_hi: int):
    rng = Xorshift64Star(seed)
    for _ in range(count):
        n = n_lo + rng.randrange(n_hi - n_lo + 1)
        p = 0.05 + 0.9 * rng.random()
        yield generate_random(n, p, rng.next_u64())


def subset_embeddings_oracle(g: Graph, pattern: Graph):
    """Direct check of every |pattern|-subset: the stated independent oracle
    for embedding enumeration."""
    out = []
    for comb in combinations(range(g.n), pattern.n):
        sub, _ = induced_subgraph(g, comb)
        if _isomorphic(sub, pattern):
            out.append(tuple(comb))
    return sorted(out)


def _isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(map(len, a.adj)) != sorted(map(len, b.adj)):
        return False
    order = sorted(range(a.n), key=lambda v: -len(a.adj[v]))
    image = [-1] * a.n
    used = [False] * b.n

    def rec(i: int) -> bool:
        if i == a.n:
            return True
        v = order[i]
        for w in range(b.n):
            if used[w] or len(a.adj[v]) != len(b.adj[w]):
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (u in a.adj[v]) != (image[u] in b.adj[w]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if rec(i + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return rec(0)


def bsize_partition_exists(g: Graph, k: int, patterns, pi_b) -> bool:
    """Subset-scan oracle: is there B with |B| <= k, G - B pattern-free, and
    G[B] satisfying the property?"""
    for size in range(0, k + 1):
        for comb in combinations(range(g.n), size):
            rest = sorted(set(range(g.n)) - set(comb))
            ga, _ = induced_subgraph(g, rest)
            if any(has_induced(ga, p) for p in patterns):
                continue
            gb, _ = induced_subgraph(g, comb)
            if satisfies_pi(gb, pi_b):
                return True
    return False


def minimal_hitting_sets_upto(sets, universe: int, k: int):
    """All minimal hitting sets of size at most k, by exhaustive scan."""
    fams = [frozenset(s) for s in sets]

    def hits(x):
        return all(x & s for s in fams)

    out = set()
    for size in range(0, k + 1):
        for comb in combinations(range(universe), size):
            x = frozenset(comb)
            if hits(x) and all(not hits(x - {e}) for e in x):
                out.add(x)
    return out
