"""Kernels parameterized by the size of the sparse side B.

Two routes: a generic kernel that shrinks the family of forbidden-subgraph
vertex sets with sunflower plucking until it has at most d!(k+1)^d members,
and a sharper kernel for the bounded-degree cluster-partition case built on
a maximal packing of induced P3s and an importance labeling."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial

from .graphs import (
    Graph,
    GuardError,
    P3,
    VertexSet,
    bits,
    connected_component_masks,
    enumerate_induced_embeddings,
    induced_subgraph,
    mask_of,
)

MAX_FORBIDDEN_ORDER = 5


@dataclass(frozen=True)
class SetFamily:
    """Deduplicated family of nonempty subsets of 0..universe-1, each of size
    at most d."""

    universe: int
    sets: tuple[VertexSet, ...]
    d: int

    @classmethod
    def build(cls, universe: int, sets, d: int | None = None) -> "SetFamily":
        canon = sorted({tuple(sorted(set(s))) for s in sets})
        for s in canon:
            if not s:
                raise ValueError("empty set in family")
            if s[0] < 0 or s[-1] >= universe:
                raise ValueError(f"set {s} not within universe {universe}")
        size = max((len(s) for s in canon), default=0)
        if d is None:
            d = size
        elif size > d:
            raise ValueError(f"set of size {size} exceeds declared d={d}")
        return cls(universe=universe, sets=tuple(canon), d=d)


def _disjoint_collection(sets: list[frozenset], need: int) -> list[frozenset] | None:
    """Exactly `need` pairwise disjoint sets (backtracking), greedily extended
    to a maximal disjoint collection; None if fewer than `need` exist."""
    order = sorted(sets, key=lambda s: tuple(sorted(s)))

    def rec(i: int, chosen: list, used: frozenset):
        if len(chosen) == need:
            return list(chosen)
        if len(chosen) + len(order) - i < need:
            return None
        for j in range(i, len(order)):
            s = order[j]
            if not s & used:
                chosen.append(s)
                got = rec(j + 1, chosen, used | s)
                if got is not None:
                    return got
                chosen.pop()
        return None

    core = rec(0, [], frozenset())
    if core is None:
        return None
    used = frozenset().union(*core)
    for s in order:
        if s not in core and not s & used:
            core.append(s)
            used |= s
    return core


def find_sunflower(sets, ell: int):
    """A sunflower with at least ell petals among the given sets, returned as
    (core frozenset, petal sets), or None. Complete search: empty cores via
    exact disjoint-collection search, nonempty cores by recursing on the
    elements ordered by occurrence count."""
    if ell < 1:
        raise ValueError("need at least one petal")
    family = sorted({frozenset(s) for s in sets}, key=lambda s: tuple(sorted(s)))
    family = [s for s in family if s]
    if len(family) < ell:
        return None
    disj = _disjoint_collection(family, ell)
    if disj is not None:
        return frozenset(), disj
    counts = Counter(x for s in family for x in s)
    for x in sorted(counts, key=lambda e: (-counts[e], e)):
        link = [s - {x} for s in family if x in s and len(s) > 1]
        if len(link) < ell:
            continue
        sub = find_sunflower(link, ell)
        if sub is not None:
            core, petals = sub
            return core | {x}, [p | {x} for p in petals]
    return None


def sunflower_reduce(fam: SetFamily, k: int) -> tuple[SetFamily, bool]:
    """Shrink fam to at most d!(k+1)^d sets while preserving the minimal
    hitting sets of size at most k: repeatedly find a sunflower with k+2
    petals and drop all petals beyond the first k+1. The flag reports that
    k+2 pairwise disjoint sets exist, which certifies that no hitting set of
    size at most k exists."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    d = fam.d
    threshold = factorial(d) * (k + 1) ** d if d else 1
    sets = [frozenset(s) for s in fam.sets]
    forced_no = _disjoint_collection(sets, k + 2) is not None
    while len(sets) > threshold:
        found = find_sunflower(sets, k + 2)
        if found is None:
            raise RuntimeError("sunflower guaranteed above threshold but not found")
        _, petals = found
        drop = set(map(frozenset, petals[k + 1 :]))
        sets = [s for s in sets if s not in drop]
    return SetFamily.build(fam.universe, sets, d=fam.d), forced_no


def enumerate_forbidden_sets(g: Graph, patterns) -> SetFamily:
    """All vertex sets of g inducing one of the forbidden patterns."""
    patterns = tuple(patterns)
    if not patterns:
        return SetFamily.build(g.n, (), d=0)
    d = max(p.n for p in patterns)
    if d > MAX_FORBIDDEN_ORDER:
        raise GuardError(
            f"forbidden pattern too large ({d} > {MAX_FORBIDDEN_ORDER} vertices)"
        )
    sets = []
    for p in patterns:
        sets.extend(enumerate_induced_embeddings(g, p))
    return SetFamily.build(g.n, sets, d=d)


def bsize_bound(d: int, k: int) -> int:
    return d * factorial(d) * (k + 1) ** d


def kernelize_by_b_size(g: Graph, k: int, patterns) -> tuple[Graph, int]:
    """Generic kernel: keep only the vertices that occur in the reduced
    forbidden-set family. Sound for every hereditary property on the B side."""
    fam = enumerate_forbidden_sets(g, patterns)
    reduced, _ = sunflower_reduce(fam, k)
    keep = set()
    for s in reduced.sets:
        keep.update(s)
    kernel, _ = induced_subgraph(g, keep)
    return kernel, k


# -- the bounded-degree cluster-partition kernel --


@dataclass(frozen=True)
class P3Packing:
    triples: tuple[VertexSet, ...]

    @property
    def v_p(self) -> VertexSet:
        out = set()
        for t in self.triples:
            out.update(t)
        return tuple(sorted(out))


def _greedy_p3_packing(g: Graph, stop_after: int | None = None) -> tuple[P3Packing, bool]:
    """Lowest-id-first greedy packing; returns (packing, complete). When
    stop_after triples are collected the scan stops early and the packing may
    not be maximal."""
    masks = g.masks
    remaining = g.full_mask
    triples = []
    while True:
        if stop_after is not None and len(triples) >= stop_after:
            return P3Packing(tuple(triples)), False
        found = None
        verts = list(bits(remaining))
        for ai in range(len(verts)):
            a = verts[ai]
            for bi in range(ai + 1, len(verts)):
                b = verts[bi]
                for ci in range(bi + 1, len(verts)):
                    c = verts[ci]
                    cnt = (
                        (masks[a] >> b & 1)
                        + (masks[a] >> c & 1)
                        + (masks[b] >> c & 1)
                    )
                    if cnt == 2:
                        found = (a, b, c)
                        break
                if found:
                    break
            if found:
                break
        if not found:
            return P3Packing(tuple(triples)), True
        triples.append(found)
        remaining &= ~mask_of(found)


def greedy_p3_packing(g: Graph) -> P3Packing:
    """Maximal set of vertex-disjoint induced P3s; what remains is a cluster
    graph."""
    packing, _ = _greedy_p3_packing(g)
    return packing


@dataclass
class LabelState:
    heavy: VertexSet
    nonheavy_fixed: VertexSet
    nonfixed: VertexSet
    important: VertexSet
    clusters: tuple[VertexSet, ...]
    cluster_index: dict


def important_bound(k: int, delta: int) -> int:
    # all 3k packing vertices counted in each classification, so an upper
    # bound regardless of how the classes split
    return 3 * k * (k + 2) + 3 * k * (2 * delta + 4) + 3 * k * (k + 1) * (2 * delta + 4)


def cluster_delta_bound(k: int, delta: int) -> int:
    i = important_bound(k, delta)
    return 3 * k + i + (delta + 2) * i


def classify_and_label(g: Graph, packing: P3Packing, k: int, delta: int) -> LabelState:
    """Classify packing vertices as heavy / nonheavy-fixed / nonfixed and
    label cluster vertices as important; all arbitrary picks are lowest-id
    (lowest cluster index first)."""
    vp = set(packing.v_p)
    rest_mask = g.full_mask & ~mask_of(vp)
    cluster_masks = connected_component_masks(g, within=rest_mask)
    cluster_masks.sort(key=lambda m: m & -m)
    clusters = tuple(tuple(bits(m)) for m in cluster_masks)
    cluster_index = {}
    for idx, c in enumerate(clusters):
        for v in c:
            cluster_index[v] = idx
    heavy, nonheavy_fixed, nonfixed = [], [], []
    important: set[int] = set()
    for u in sorted(vp):
        nb_by_cluster: dict[int, list[int]] = {}
        for w in bits(g.masks[u] & rest_mask):
            nb_by_cluster.setdefault(cluster_index[w], []).append(w)
        adj_clusters = sorted(nb_by_cluster)
        if len(adj_clusters) >= k + 2:
            heavy.append(u)
            for ci in adj_clusters[: k + 2]:
                important.add(min(nb_by_cluster[ci]))
            continue
        fixed_cluster = None
        for ci in adj_clusters:
            nbs = nb_by_cluster[ci]
            non = len(clusters[ci]) - len(nbs)
            if len(nbs) >= delta + 2 and non >= delta + 2:
                fixed_cluster = ci
                break
        if fixed_cluster is not None:
            nonheavy_fixed.append(u)
            nbs = sorted(nb_by_cluster[fixed_cluster])
            nonnbs = sorted(set(clusters[fixed_cluster]) - set(nbs))
            important.update(nbs[: delta + 2])
            important.update(nonnbs[: delta + 2])
            continue
        nonfixed.append(u)
        for ci in adj_clusters:
            nbs = sorted(nb_by_cluster[ci])
            nonnbs = sorted(set(clusters[ci]) - set(nbs))
            important.update(nbs[: delta + 2])
            important.update(nonnbs[: delta + 2])
    return LabelState(
        heavy=tuple(heavy),
        nonheavy_fixed=tuple(nonheavy_fixed),
        nonfixed=tuple(nonfixed),
        important=tuple(sorted(important)),
        clusters=clusters,
        cluster_index=cluster_index,
    )


@dataclass(frozen=True)
class ClusterDeltaResult:
    outcome: str  # "kernel" | "reject"
    graph: Graph | None
    k: int
    delta: int
    before: int
    after: int | None
    rule_log: tuple[tuple[str, int], ...]


def kernelize_cluster_delta(g: Graph, k: int, delta: int) -> ClusterDeltaResult:
    """One exhaustive pass per rule, in order: reject on an oversized
    packing, drop clusters with no important vertex, then trim each cluster
    to at most delta+2 unimportant vertices. Labels are computed once and
    never revisited."""
    if k < 0 or delta < 0:
        raise ValueError("parameters must be nonnegative")
    packing, complete = _greedy_p3_packing(g, stop_after=k + 1)
    if len(packing.triples) > k:
        return ClusterDeltaResult(
            outcome="reject",
            graph=None,
            k=k,
            delta=delta,
            before=g.n,
            after=None,
            rule_log=(("packing-size", 0),),
        )
    labels = classify_and_label(g, packing, k, delta)
    important = set(labels.important)
    removed: set[int] = set()
    dropped_clusters = 0
    for cluster in labels.clusters:
        if not any(v in important for v in cluster):
            removed.update(cluster)
            dropped_clusters += 1
    trimmed = 0
    for cluster in labels.clusters:
        if cluster[0] in removed:
            continue
        unimportant = [v for v in cluster if v not in important]
        extra = len(unimportant) - (delta + 2)
        if extra > 0:
            removed.update(unimportant[:extra])
            trimmed += extra
    keep = [v for v in range(g.n) if v not in removed]
    kernel, _ = induced_subgraph(g, keep)
    return ClusterDeltaResult(
        outcome="kernel",
        graph=kernel,
        k=k,
        delta=delta,
        before=g.n,
        after=kernel.n,
        rule_log=(
            ("packing-size", 0),
            ("unimportant-clique", dropped_clusters),
            ("many-unimportant", trimmed),
        ),
    )
