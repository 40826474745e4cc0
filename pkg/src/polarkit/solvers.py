"""Exact partition oracles: exhaustive search for monopolar partitions and a
propagation-based backtracking solver for cluster-property partitions.

The backtracking solver labels vertices A or B and repeatedly applies forced
moves: a vertex whose A-placement would close an induced P3 on the cluster
side must go to B, and a vertex whose B-placement would complete a forbidden
pattern must go to A. That cascade is what makes seeded instances from the
composition generator tractable."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    GuardError,
    PiSpec,
    VertexSet,
    bits,
    has_induced_at,
    induced_subgraph,
    mask_of,
    satisfies_pi,
    vset,
)


@dataclass(frozen=True)
class MonopolarPartition:
    a: VertexSet
    b: VertexSet


@dataclass(frozen=True)
class ClusterPiPartition:
    a: VertexSet
    b: VertexSet
    budget: int


class PartialAssignment:
    """Seed labels for the backtracking solver; seeded vertices are never
    relabeled."""

    __slots__ = ("labels",)

    def __init__(self, labels: dict[int, str] | None = None):
        self.labels = dict(labels or {})
        for v, side in self.labels.items():
            if side not in ("A", "B"):
                raise ValueError(f"bad label {side!r} for vertex {v}")

    @classmethod
    def from_pairs(cls, pairs) -> "PartialAssignment":
        labels: dict[int, str] = {}
        for side, v in pairs:
            if v in labels and labels[v] != side:
                raise ValueError(f"inconsistent seed for vertex {v}")
            labels[v] = side
        return cls(labels)


def solve_monopolar_bruteforce(
    g: Graph, k: int, max_n: int = 20
) -> MonopolarPartition | None:
    """First valid monopolar partition with at most k clusters, scanning
    B-membership masks in binary order; None if there is none."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.n > max_n:
        raise GuardError(f"instance too large ({g.n} > {max_n} vertices)")
    masks = g.masks
    full = g.full_mask
    for b in range(full + 1):
        ok = True
        for v in bits(b):
            if masks[v] & b:
                ok = False
                break
        if not ok:
            continue
        a = full & ~b
        count = _cluster_count(masks, a)
        if count is not None and count <= k:
            return MonopolarPartition(a=tuple(bits(a)), b=tuple(bits(b)))
    return None


def _cluster_count(masks, area: int) -> int | None:
    """Number of clusters of the induced subgraph on area, or None if some
    component is not a clique."""
    count = 0
    rest = area
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= masks[u] & area
            frontier = nxt & ~comp
            comp |= frontier
        for u in bits(comp):
            if masks[u] & comp != comp ^ (1 << u):
                return None
        count += 1
        rest &= ~comp
    return count


def monopolar_min_clusters(g: Graph, max_n: int = 20) -> int | None:
    """Minimum cluster count over all monopolar partitions, or None when the
    graph is not monopolar. Exhaustive over all bipartitions."""
    if g.n > max_n:
        raise GuardError(f"instance too large ({g.n} > {max_n} vertices)")
    masks = g.masks
    full = g.full_mask
    n = g.n
    if n == 0:
        return 0
    # bottom-up tables over subsets: independence and cluster counts
    indep = bytearray(full + 1)
    indep[0] = 1
    clusters = [0] * (full + 1)
    for m in range(1, full + 1):
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        indep[m] = 1 if indep[rest] and not masks[v] & rest else 0
        # component of v within m
        comp = low
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= masks[u] & m
            frontier = nxt & ~comp
            comp |= frontier
        good = all(masks[u] & comp == comp ^ (1 << u) for u in bits(comp))
        if not good:
            clusters[m] = -1
        else:
            prev = clusters[m & ~comp]
            clusters[m] = -1 if prev < 0 else prev + 1
    best = None
    for b in range(full + 1):
        if indep[b]:
            c = clusters[full & ~b]
            if c >= 0 and (best is None or c < best):
                best = c
                if best == 0:
                    break
    return best


def validate_partition(g, partition, k_or_d, pi: PiSpec | None = None):
    """Re-check a claimed partition from scratch; returns (ok, violation).

    Monopolar partitions are checked against an edgeless B side; cluster-Pi
    partitions against the supplied property."""
    a, b = vset(partition.a), vset(partition.b)
    am, bm = mask_of(a), mask_of(b)
    if am & bm or (am | bm) != g.full_mask:
        return False, "not a partition"
    count = _cluster_count(g.masks, am)
    if count is None:
        return False, "A contains induced P3"
    if count > k_or_d:
        return False, f"cluster count {count} > {k_or_d}"
    if pi is None:
        for v in b:
            if g.masks[v] & bm:
                return False, "B not independent"
    else:
        sub, _ = induced_subgraph(g, b)
        if not satisfies_pi(sub, pi):
            return False, "B violates Pi"
    return True, None


class _ClusterPiSearch:
    def __init__(self, g: Graph, d: int, pi: PiSpec):
        self.g = g
        self.d = d
        self.pi = pi
        self.masks = g.masks
        self.a_mask = 0
        self.b_mask = 0
        self.free_mask = g.full_mask
        self.label = [None] * g.n
        self.trail: list[int] = []
        self.radius = max((p.n - 1 for p in pi.patterns), default=1)
        self.radius = max(self.radius, 2)

    # -- conflict predicates --

    def blocked_a(self, v: int) -> bool:
        """Would labeling v with A close an induced P3 on the A side?"""
        masks = self.masks
        na = masks[v] & self.a_mask
        for u in bits(na):
            if (na & ~masks[u]) ^ (1 << u):
                return True  # v is the middle of u-v-x
            if masks[u] & self.a_mask & ~masks[v] & ~(1 << v):
                return True  # v-u-w with w not adjacent to v
        return False

    def blocked_b(self, v: int) -> bool:
        """Would labeling v with B complete a forbidden pattern or break the
        degree bound on the B side?"""
        withv = self.b_mask | (1 << v)
        delta = self.pi.max_degree
        if delta is not None:
            nb = self.masks[v] & withv
            if nb.bit_count() > delta:
                return True
            for u in bits(nb):
                if (self.masks[u] & withv).bit_count() > delta:
                    return True
        for p in self.pi.patterns:
            if p.n <= withv.bit_count() and has_induced_at(self.g, p, v, withv):
                return True
        return False

    # -- assignment machinery --

    def assign(self, v: int, side: str) -> bool:
        """Label v; returns False on immediate conflict."""
        if side == "A":
            if self.blocked_a(v):
                return False
            self.a_mask |= 1 << v
        else:
            if self.blocked_b(v):
                return False
            self.b_mask |= 1 << v
        self.free_mask &= ~(1 << v)
        self.label[v] = side
        self.trail.append(v)
        return True

    def undo_to(self, mark: int) -> None:
        while len(self.trail) > mark:
            v = self.trail.pop()
            side = self.label[v]
            self.label[v] = None
            self.free_mask |= 1 << v
            if side == "A":
                self.a_mask &= ~(1 << v)
            else:
                self.b_mask &= ~(1 << v)

    def _ball(self, v: int, radius: int) -> int:
        reach = 1 << v
        for _ in range(radius):
            grow = 0
            for u in bits(reach):
                grow |= self.masks[u]
            reach |= grow
        return reach

    def propagate(self, changed: list[int]) -> bool:
        """Push forced labels to fixpoint; False on conflict."""
        work = 0
        for v in changed:
            work |= self._ball(v, self.radius) & self.free_mask
        while work:
            u = (work & -work).bit_length() - 1
            work &= ~(1 << u)
            if not self.free_mask >> u & 1:
                continue
            ba = self.blocked_a(u)
            bb = self.blocked_b(u)
            if ba and bb:
                return False
            if ba or bb:
                side = "B" if ba else "A"
                if not self.assign(u, side):
                    return False
                work |= self._ball(u, self.radius) & self.free_mask
        return self.cluster_lower_bound() <= self.d

    def cluster_lower_bound(self) -> int:
        """Components of A plus free that already contain an A vertex can
        never merge with each other."""
        count = 0
        area = self.a_mask | self.free_mask
        rest = area
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.masks[u] & area
                frontier = nxt & ~comp
                comp |= frontier
            if comp & self.a_mask:
                count += 1
            rest &= ~comp
        return count

    def search(self) -> bool:
        if not self.free_mask:
            return self.final_check()
        # branch on the free vertex of highest degree, lowest id first
        best = -1
        bestdeg = -1
        for v in bits(self.free_mask):
            dv = len(self.g.adj[v])
            if dv > bestdeg:
                best, bestdeg = v, dv
        for side in ("A", "B"):
            mark = len(self.trail)
            if self.assign(best, side) and self.propagate([best]) and self.search():
                return True
            self.undo_to(mark)
        return False

    def final_check(self) -> bool:
        count = _cluster_count(self.masks, self.a_mask)
        if count is None or count > self.d:
            return False
        sub, _ = induced_subgraph(self.g, tuple(bits(self.b_mask)))
        return satisfies_pi(sub, self.pi)


def solve_cluster_pi(
    g: Graph,
    d: int,
    pi: PiSpec,
    seed: PartialAssignment | None = None,
    max_free: int = 40,
) -> ClusterPiPartition | None:
    """Cluster-Pi partition with at most d clusters extending the seed, or
    None. Exact; deterministic for identical inputs."""
    if d < 0:
        raise ValueError("budget must be nonnegative")
    search = _ClusterPiSearch(g, d, pi)
    seeded = sorted((seed.labels if seed else {}).items())
    for v, _ in seeded:
        if not (0 <= v < g.n):
            raise ValueError(f"seed vertex {v} out of range")
    if g.n - len(seeded) > max_free:
        raise GuardError(
            f"too many free vertices ({g.n - len(seeded)} > {max_free})"
        )
    for v, side in seeded:
        if not search.assign(v, side):
            return None
    if not search.propagate([v for v, _ in seeded]):
        return None
    if not search.search():
        return None
    return ClusterPiPartition(
        a=tuple(bits(search.a_mask)), b=tuple(bits(search.b_mask)), budget=d
    )
