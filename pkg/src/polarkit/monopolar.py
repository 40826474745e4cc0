"""Kernelization of monopolar recognition parameterized by the cluster
budget k.

The state is a normalized partition: vertices already pinned to the cluster
side (a_true) or the independent side (b_true), plus a nice clique
decomposition of everything else. Reduction rules are scanned in a fixed
priority order and the decomposition is recomputed after every application;
rules 1, 7 and 9 work on the bipartite push graph between large-clique
vertices and vertex cliques. The surviving graph has at most 9k^4 + 9k + 1
vertices."""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import (
    EDGE,
    LARGE,
    VERTEX,
    CliqueDecomposition,
    _decompose_masks,
    verify_decomposition,
)
from .graphs import Graph, VertexSet, bits, mask_of

RULE_ORDER = ("0", "0.1", "0.5", "3", "4", "5", "6", "8", "1", "7", "9")


@dataclass(frozen=True)
class TraceEntry:
    rule: str
    moved: VertexSet
    side: str  # "A" | "B" | "shrink" | "reject"
    id_map: tuple | None = None  # (old, new) pairs for rebuild rules

    def format(self) -> str:
        moved = ",".join(str(v) for v in self.moved)
        return f"rule={self.rule} moved={moved} side={self.side}"


@dataclass(frozen=True)
class AuxGraph:
    """Bipartite push graph between large-clique vertices and vertex
    cliques; edges are exactly the graph edges between the two sides."""

    v_c: VertexSet
    v_i: VertexSet
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ParityClosure:
    source: int
    even: VertexSet  # reachable at even distance, includes the source
    odd: VertexSet


@dataclass(frozen=True)
class KernelResult:
    outcome: str  # "kernel" | "reject"
    graph: Graph | None
    k: int
    trace: tuple[TraceEntry, ...]
    before: int
    after: int | None


class KernelAudit:
    """Optional instrumentation used by the acceptance suite: re-verify
    decompositions, the push-graph degree bound, and rule priority."""

    def __init__(
        self,
        verify_decompositions: bool = False,
        check_lambda: bool = False,
        check_priority: bool = False,
    ):
        self.verify_decompositions = verify_decompositions
        self.check_lambda = check_lambda
        self.check_priority = check_priority
        self.violations: list[str] = []
        self.decomposition_checks = 0
        self.lambda_checks = 0
        self.priority_checks = 0


class KernelState:
    """Mutable kernelization state; single-owner, mutated sequentially."""

    __slots__ = ("k", "n", "masks", "edge_list", "a_mask", "b_mask", "dec_raw",
                 "trace", "status", "audit")

    def __init__(self, g: Graph, k: int, a_true=(), b_true=(), audit=None):
        if k < 0:
            raise ValueError("k must be nonnegative")
        self.k = k
        self.n = g.n
        self.masks = list(g.masks)
        self.edge_list = list(g.edges)
        self.a_mask = mask_of(a_true)
        self.b_mask = mask_of(b_true)
        if (self.a_mask | self.b_mask) & ~g.full_mask:
            raise ValueError("pinned vertex out of range")
        if self.a_mask & self.b_mask:
            raise ValueError("a_true and b_true overlap")
        self.trace: list[TraceEntry] = []
        self.status = "running"
        self.audit = audit
        self.dec_raw: list[tuple[str, int]] = []
        self._recompute_dec()

    # -- views --

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def free_mask(self) -> int:
        return self.full_mask & ~(self.a_mask | self.b_mask)

    @property
    def g(self) -> Graph:
        return Graph(self.n, self.edge_list)

    @property
    def a_true(self) -> VertexSet:
        return tuple(bits(self.a_mask))

    @property
    def b_true(self) -> VertexSet:
        return tuple(bits(self.b_mask))

    @property
    def dec(self) -> CliqueDecomposition:
        return CliqueDecomposition(
            cliques=tuple(tuple(bits(m)) for _, m in self.dec_raw),
            kinds=tuple(kind for kind, _ in self.dec_raw),
        )

    def _recompute_dec(self) -> None:
        self.dec_raw = _decompose_masks(self.masks, self.edge_list, self.free_mask)
        audit = self.audit
        if audit is not None and audit.verify_decompositions:
            audit.decomposition_checks += 1
            ok, why = verify_decomposition(
                self.g, self.dec, excluded=self.a_true + self.b_true
            )
            if not ok:
                audit.violations.append(f"decomposition: {why}")

    def _a_cluster_masks(self) -> list[int]:
        out = []
        rest = self.a_mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.masks[u] & self.a_mask
                frontier = nxt & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out


# -- the push graph --


def _aux_side_masks(state: KernelState) -> tuple[int, int]:
    vc = 0
    vi = 0
    for kind, m in state.dec_raw:
        if kind == LARGE:
            vc |= m
        elif kind == VERTEX:
            vi |= m
    return vc, vi


def _lambda_component_masks(masks, vc: int, vi: int) -> list[int]:
    comps = []
    rest = vc | vi
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= masks[u] & (vi if vc >> u & 1 else vc)
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def build_aux_graph(state: KernelState) -> AuxGraph:
    vc, vi = _aux_side_masks(state)
    edges = []
    for u in bits(vc):
        for v in bits(state.masks[u] & vi):
            edges.append((u, v) if u < v else (v, u))
    edges.sort()
    return AuxGraph(v_c=tuple(bits(vc)), v_i=tuple(bits(vi)), edges=tuple(edges))


def parity_closure(aux: AuxGraph, v: int) -> ParityClosure:
    """BFS layers of v in the push graph split by distance parity; the even
    side includes v itself."""
    nodes = set(aux.v_c) | set(aux.v_i)
    if v not in nodes:
        raise ValueError(f"vertex {v} is not in the push graph")
    adj: dict[int, set[int]] = {u: set() for u in nodes}
    for a, b in aux.edges:
        adj[a].add(b)
        adj[b].add(a)
    even, odd = {v}, set()
    frontier = {v}
    parity = 0
    while frontier:
        parity ^= 1
        nxt = set()
        for u in frontier:
            nxt |= adj[u]
        nxt -= even | odd
        (odd if parity else even).update(nxt)
        frontier = nxt
    return ParityClosure(source=v, even=tuple(sorted(even)), odd=tuple(sorted(odd)))


def lambda_max_degree(state: KernelState) -> int:
    vc, vi = _aux_side_masks(state)
    best = 0
    for u in bits(vc | vi):
        deg = (state.masks[u] & (vi if vc >> u & 1 else vc)).bit_count()
        if deg > best:
            best = deg
    return best


# -- rule finders: pure applicability scans returning an action or None --


def _find_rule_0(state):
    masks = state.masks
    for v in bits(state.b_mask):
        if masks[v] & state.b_mask:
            return ("reject",)
    count = 0
    for comp in state._a_cluster_masks():
        for u in bits(comp):
            if masks[u] & comp != comp ^ (1 << u):
                return ("reject",)
        count += 1
    if count > state.k:
        return ("reject",)
    return None


def _find_rule_0_1(state):
    for v in bits(state.free_mask):
        if state.masks[v] & state.b_mask:
            return ("a", 1 << v)
    return None


def _find_rule_0_5(state):
    masks = state.masks
    am = state.a_mask
    for v in bits(state.free_mask):
        na = masks[v] & am
        hit = False
        for u in bits(na):
            if (na & ~masks[u]) ^ (1 << u):
                hit = True  # u, v adjacent and v has another A-neighbor missing u
                break
            if masks[u] & am & ~masks[v] & ~(1 << v):
                hit = True  # v - u - w with w in A not adjacent to v
                break
        if hit:
            return ("b", 1 << v)
    return None


def _find_rule_3(state):
    masks = state.masks
    larges = [m for kind, m in state.dec_raw if kind == LARGE]
    for v in bits(state.free_mask):
        for cm in larges:
            if cm >> v & 1:
                continue
            inter = masks[v] & cm
            c = inter.bit_count()
            if 1 < c <= cm.bit_count() - 1:
                return ("a", inter)
    return None


def _find_rule_4(state):
    masks = state.masks
    parts = [(kind, m) for kind, m in state.dec_raw if kind in (LARGE, EDGE)]
    for i in range(len(parts)):
        ki, ci = parts[i]
        if ki != LARGE:
            continue
        for j in range(i + 1, len(parts)):
            cj = parts[j][1]
            total = 0
            endpoints = []
            for u in bits(ci):
                t = masks[u] & cj
                if t:
                    endpoints.append((u, t))
                    total += t.bit_count()
            if total < 2:
                continue
            # case 1: two vertex-disjoint edges between the cliques
            if len(endpoints) >= 2:
                u1, m1 = endpoints[0]
                for u2, m2 in endpoints[1:]:
                    if (m1 | m2).bit_count() >= 2:
                        rest = ci & ~(1 << u1) & ~(1 << u2)
                        w = (rest & -rest).bit_length() - 1
                        return ("a", 1 << w)
            # case 2: a single attachment vertex on the large-clique side
            if len(endpoints) == 1:
                return ("b", 1 << endpoints[0][0])
            # neither case: only possible when earlier rules still apply
    return None


def _find_rule_5(state):
    large = sum(1 for kind, _ in state.dec_raw if kind == LARGE)
    edge = sum(1 for kind, _ in state.dec_raw if kind == EDGE)
    if large > state.k or large + edge > 2 * state.k:
        return ("reject",)
    return None


def _find_rule_6(state):
    masks = state.masks
    larges = [m for kind, m in state.dec_raw if kind == LARGE]
    for cm in state._a_cluster_masks():
        for li in larges:
            adjacent = [v for v in bits(li) if masks[v] & cm]
            size = li.bit_count()
            if len(adjacent) == 1:
                return ("b", 1 << adjacent[0])
            if len(adjacent) == size - 1:
                non = li & ~mask_of(adjacent)
                return ("b", non)
    return None


def _find_rule_8(state):
    bcnt = state.b_mask.bit_count()
    if bcnt > state.k + 1:
        return ("rule8",)
    for comp in state._a_cluster_masks():
        if comp.bit_count() >= 2:
            return ("rule8",)
    # rebuild also when pinned cluster-side vertices are not yet enforced by
    # k+1 shared independent neighbors; without that wiring the final shrink
    # would not preserve equivalence (pinned vertices could drift to B in the
    # output instance)
    if state.a_mask:
        if bcnt != state.k + 1:
            return ("rule8",)
        for a in bits(state.a_mask):
            if state.masks[a] & state.b_mask != state.b_mask:
                return ("rule8",)
    return None


def _find_rule_1(state):
    _, vi = _aux_side_masks(state)
    for v in bits(state.free_mask):
        if (state.masks[v] & vi).bit_count() > state.k:
            return ("a", 1 << v)
    return None


def _component_stats(state, vc: int, vi: int):
    """Per push-graph component: (component mask, edge inside the large side,
    size of the vertex-clique side)."""
    stats = []
    for comp in _lambda_component_masks(state.masks, vc, vi):
        cside = comp & vc
        iside = comp & vi
        edge_in_c = any(state.masks[u] & cside for u in bits(cside))
        stats.append((comp, edge_in_c, iside.bit_count()))
    return stats


def _find_rule_7(state):
    vc, vi = _aux_side_masks(state)
    if not (vc | vi):
        return None
    stats = _component_stats(state, vc, vi)
    k = state.k

    def lookup(v):
        bit = 1 << v
        for comp, edge_c, cnt_i in stats:
            if comp & bit:
                return edge_c, cnt_i
        raise AssertionError("vertex missing from push graph components")

    for v in bits(vc):
        edge_c, cnt_i = lookup(v)
        if edge_c or cnt_i > k:
            return ("a", 1 << v)
    for v in bits(vi):
        edge_c, cnt_i = lookup(v)
        if cnt_i > k or edge_c:
            return ("b", 1 << v)
    return None


def _find_rule_9(state):
    masks = state.masks
    vc, vi = _aux_side_masks(state)
    rep = state.a_mask | state.b_mask
    larges = [m for kind, m in state.dec_raw if kind == LARGE]
    # a pinned cluster that touches a large clique must be fully joined to
    # it: with the earlier rules saturated, anything else admits no monopolar
    # partition at all, and shrinking first would lose that evidence
    for cm in state._a_cluster_masks():
        for li in larges:
            touching = False
            joined = True
            for v in bits(cm):
                t = masks[v] & li
                if t:
                    touching = True
                if t != li:
                    joined = False
            if touching and not joined:
                return ("reject",)
    for cm in larges:
        fixed = 0
        for v in bits(cm):
            fixed |= 1 << v
            if fixed.bit_count() == 3:
                break
        rep |= fixed
    v_edge = 0
    for kind, m in state.dec_raw:
        if kind == EDGE:
            v_edge |= m
    rep |= v_edge
    n_edge = 0
    for v in bits(v_edge):
        n_edge |= masks[v] & (vc | vi)
    v_inter = 0
    for i in range(len(larges)):
        for j in range(i + 1, len(larges)):
            for u in bits(larges[i]):
                t = masks[u] & larges[j]
                if t:
                    v_inter |= (1 << u) | t
    if n_edge | v_inter:
        for comp in _lambda_component_masks(masks, vc, vi):
            if comp & (n_edge | v_inter):
                rep |= comp
    if rep == state.full_mask:
        return None
    return ("rule9", rep)


def compute_v_rep(state: KernelState, aux: AuxGraph | None = None) -> VertexSet:
    """Representative set kept by rule 9: pinned vertices, three fixed
    vertices per large clique, edge-clique vertices, and the push-graph
    reachability closures of edge-clique neighborhoods and inter-clique edge
    endpoints."""
    action = _find_rule_9(state)
    if action is None:
        return tuple(bits(state.full_mask))
    return tuple(bits(action[1]))


_FINDERS = {
    "0": _find_rule_0,
    "0.1": _find_rule_0_1,
    "0.5": _find_rule_0_5,
    "3": _find_rule_3,
    "4": _find_rule_4,
    "5": _find_rule_5,
    "6": _find_rule_6,
    "8": _find_rule_8,
    "1": _find_rule_1,
    "7": _find_rule_7,
    "9": _find_rule_9,
}


def _edges_from_masks(masks) -> list[tuple[int, int]]:
    edges = []
    for u in range(len(masks)):
        for v in bits(masks[u]):
            if v > u:
                edges.append((u, v))
    return edges


def _perform_rule_8(state: KernelState) -> TraceEntry:
    k = state.k
    clusters = sorted(state._a_cluster_masks(), key=lambda m: m & -m)
    free_list = list(bits(state.free_mask))
    n_new = len(clusters) + len(free_list) + k + 1
    v2_start = len(clusters) + len(free_list)
    old_masks = state.masks
    free_index = {v: len(clusters) + i for i, v in enumerate(free_list)}
    masks = [0] * n_new
    for ci, cm in enumerate(clusters):
        for j in range(k + 1):
            masks[ci] |= 1 << (v2_start + j)
            masks[v2_start + j] |= 1 << ci
        for v in free_list:
            if old_masks[v] & cm:
                nv = free_index[v]
                masks[ci] |= 1 << nv
                masks[nv] |= 1 << ci
    fm = state.free_mask
    for v in free_list:
        nv = free_index[v]
        for u in bits(old_masks[v] & fm):
            nu = free_index[u]
            masks[nv] |= 1 << nu
            masks[nu] |= 1 << nv
    id_map = []
    for ci, cm in enumerate(clusters):
        id_map.extend((v, ci) for v in bits(cm))
    id_map.extend((v, free_index[v]) for v in free_list)
    moved = tuple(bits(state.a_mask | state.b_mask))
    state.n = n_new
    state.masks = masks
    state.edge_list = _edges_from_masks(masks)
    state.a_mask = (1 << len(clusters)) - 1
    state.b_mask = ((1 << (k + 1)) - 1) << v2_start
    return TraceEntry(rule="8", moved=moved, side="shrink", id_map=tuple(sorted(id_map)))


def _perform_rule_9(state: KernelState, rep: int) -> TraceEntry:
    keep = list(bits(rep))
    index = {v: i for i, v in enumerate(keep)}
    old_masks = state.masks
    masks = [0] * len(keep)
    for v in keep:
        nv = index[v]
        for u in bits(old_masks[v] & rep):
            masks[nv] |= 1 << index[u]
    removed = tuple(bits(state.full_mask & ~rep))
    state.n = len(keep)
    state.masks = masks
    state.edge_list = _edges_from_masks(masks)
    state.a_mask = mask_of(index[v] for v in bits(state.a_mask))
    state.b_mask = mask_of(index[v] for v in bits(state.b_mask))
    return TraceEntry(
        rule="9", moved=removed, side="shrink", id_map=tuple(sorted(index.items()))
    )


def apply_rule(state: KernelState, rule: str) -> str:
    """Test and apply one reduction rule; returns 'applied', 'reject', or
    'inapplicable'. On application the decomposition is recomputed."""
    finder = _FINDERS.get(rule)
    if finder is None:
        raise ValueError(f"unknown rule id {rule!r}")
    if state.status != "running":
        raise ValueError("state is not running")
    action = finder(state)
    if action is None:
        return "inapplicable"
    kind = action[0]
    if kind == "reject":
        state.status = "rejected"
        state.trace.append(TraceEntry(rule=rule, moved=(), side="reject"))
        return "reject"
    if kind == "a":
        state.a_mask |= action[1]
        state.trace.append(
            TraceEntry(rule=rule, moved=tuple(bits(action[1])), side="A")
        )
    elif kind == "b":
        state.b_mask |= action[1]
        state.trace.append(
            TraceEntry(rule=rule, moved=tuple(bits(action[1])), side="B")
        )
    elif kind == "rule8":
        state.trace.append(_perform_rule_8(state))
    elif kind == "rule9":
        state.trace.append(_perform_rule_9(state, action[1]))
    state._recompute_dec()
    return "applied"


def kernelize_monopolar(g: Graph, k: int, audit: KernelAudit | None = None) -> KernelResult:
    """Apply the reduction rules exhaustively in priority order, restarting
    from the first rule after every application."""
    state = KernelState(g, k, audit=audit)
    cap = 8 * max(g.n, 1) + 32
    applications = 0
    while True:
        progressed = False
        for idx, rule in enumerate(RULE_ORDER):
            if audit is not None and audit.check_lambda and rule == "7":
                audit.lambda_checks += 1
                deg = lambda_max_degree(state)
                if deg > k:
                    audit.violations.append(
                        f"push-graph degree {deg} > k={k} before rule 7"
                    )
            if audit is not None and audit.check_priority:
                if _FINDERS[rule](state) is not None:
                    audit.priority_checks += 1
                    for earlier in RULE_ORDER[:idx]:
                        if _FINDERS[earlier](state) is not None:
                            audit.violations.append(
                                f"rule {earlier} applicable when rule {rule} fired"
                            )
            out = apply_rule(state, rule)
            if out == "reject":
                return KernelResult(
                    outcome="reject",
                    graph=None,
                    k=k,
                    trace=tuple(state.trace),
                    before=g.n,
                    after=None,
                )
            if out == "applied":
                progressed = True
                applications += 1
                if applications > cap:
                    raise RuntimeError("rule applications exceeded termination cap")
                break
        if not progressed:
            break
    state.status = "done"
    return KernelResult(
        outcome="kernel",
        graph=state.g,
        k=k,
        trace=tuple(state.trace),
        before=g.n,
        after=state.n,
    )
