"""Executable OR-composition: bundle many colorful-independent-set instances
into a single cluster-property partition instance.

The construction grows clusters around anchor vertices (one per allowed
cluster), pins vertices to a side with copies of the minimal forbidden
pattern, and wires binary selection trees that turn the budget shortfall of
one cluster into a cascade of forced moves selecting an instance, then one
vertex per color, with edge gadgets vetoing adjacent picks. The result is a
yes-instance exactly when some input instance has a colorful independent
set."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, VertexSet, bits, is_connected, mask_of, vset
from .solvers import ClusterPiPartition


@dataclass(frozen=True)
class CISInstance:
    """Properly colored graph asked for an independent set with exactly one
    vertex of each color (colors 0..k-1)."""

    graph: Graph
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.n:
            raise ValueError("one color per vertex required")
        if self.k < 1:
            raise ValueError("need at least one color")
        for c in self.colors:
            if not (0 <= c < self.k):
                raise ValueError(f"color {c} out of range")
        for u, v in self.graph.edges:
            if self.colors[u] == self.colors[v]:
                raise ValueError(f"coloring not proper on edge ({u}, {v})")

    def color_classes(self) -> list[VertexSet]:
        classes = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            classes[c].append(v)
        return [tuple(c) for c in classes]


def colorful_independent_set(inst: CISInstance) -> VertexSet | None:
    """Brute-force witness: one vertex of each color, pairwise nonadjacent."""
    classes = inst.color_classes()
    if any(not c for c in classes):
        return None
    masks = inst.graph.masks
    pick: list[int] = []

    def rec(i: int, used_adj: int) -> VertexSet | None:
        if i == inst.k:
            return tuple(sorted(pick))
        for v in classes[i]:
            if used_adj >> v & 1:
                continue
            pick.append(v)
            got = rec(i + 1, used_adj | masks[v])
            if got is not None:
                return got
            pick.pop()
        return None

    return rec(0, 0)


def _next_pow2(x: int) -> int:
    p = 1
    while p < x:
        p *= 2
    return p


@dataclass(frozen=True)
class PaddedBatch:
    instances: tuple[CISInstance, ...]
    k: int
    n: int  # common color-class size, a power of two
    t: int  # instance count, a power of two
    m: int  # common edge-slot count
    edge_slots: tuple[tuple[tuple[int, int], ...], ...]  # per instance, m pairs


def pad_instances(raw) -> PaddedBatch:
    """Normalize a nonempty list of instances: equal color counts (new colors
    get isolated vertices), color classes of a common power-of-two size
    (fillers adjacent to every vertex of every other class), a power-of-two
    instance count (duplicating the last instance), and per-instance lists of
    m edge slots (short instances repeat their first edge)."""
    raw = list(raw)
    if not raw:
        raise ValueError("need at least one instance")
    k = max(inst.k for inst in raw)
    staged = []
    for inst in raw:
        g, colors = inst.graph, list(inst.colors)
        if inst.k < k:
            extra = k - inst.k
            n0 = g.n
            g = Graph(n0 + extra, g.edges)
            colors += list(range(inst.k, k))
        staged.append((g, colors))
    n = max(
        max(sum(1 for c in colors if c == i) for i in range(k))
        for _, colors in staged
    )
    n = max(2, _next_pow2(n))
    padded = []
    for g, colors in staged:
        edges = list(g.edges)
        colors = list(colors)
        for i in range(k):
            have = sum(1 for c in colors if c == i)
            for _ in range(n - have):
                w = len(colors)
                # filler blocks every colorful independent set it would join
                edges.extend(
                    (min(w, u), max(w, u))
                    for u, c in enumerate(colors)
                    if c != i
                )
                colors.append(i)
        padded.append(CISInstance(Graph(len(colors), edges), k, tuple(colors)))
    t = max(2, _next_pow2(len(padded)))
    while len(padded) < t:
        padded.append(padded[-1])
    m = max(inst.graph.m for inst in padded)
    slots = []
    for inst in padded:
        es = list(inst.graph.edges)
        if len(es) < m:
            if not es:
                raise ValueError(
                    "instance without edges cannot be padded to the common edge count"
                )
            es += [es[0]] * (m - len(es))
        slots.append(tuple(es))
    return PaddedBatch(
        instances=tuple(padded),
        k=k,
        n=n,
        t=t,
        m=m,
        edge_slots=tuple(slots),
    )


def budget_formula(k: int, n: int, t: int, m: int) -> int:
    logt = t.bit_length() - 1
    logn = n.bit_length() - 1
    return 2 + 2 * logt + (k + 1) + k * logn + k * n + 2 * m


@dataclass(frozen=True)
class SelectionGadget:
    group: int
    activator: int
    levels: tuple[tuple[tuple[int, int], ...], ...]  # levels[i][pos] = (alpha, beta)

    @property
    def choices(self) -> tuple[int, ...]:
        return tuple(beta for _, beta in self.levels[-1])


class CompositionBuilder:
    """Incremental gadget construction around a fixed anchor scaffold."""

    def __init__(self, pattern: Graph, budget: int):
        if pattern.n < 3:
            raise ValueError("forbidden pattern needs at least 3 vertices")
        if not is_connected(pattern):
            raise ValueError("forbidden pattern must be connected")
        self.pattern = pattern
        self.budget = budget
        self.adj: list[set[int]] = []
        self.roles: dict[int, tuple] = {}
        self.anchors: dict[tuple[int, int], int] = {}
        self.dials: dict[int, list[int]] = {}
        self.dial_of: dict[int, int] = {}
        self.helpers: set[int] = set()
        self.exclusives: list[tuple[int, ...]] = []
        self.copies: list[dict] = []
        # identification slot for pinned vertices: max degree, lowest id
        degs = [len(pattern.adj[v]) for v in range(pattern.n)]
        self.anchor_slot = max(range(pattern.n), key=lambda v: (degs[v], -v))
        pairs = [(u, v) for u, v in pattern.edges]
        self.adjacent_slots = min(pairs)

    # -- primitive operations --

    def new_vertex(self, role: tuple) -> int:
        vid = len(self.adj)
        self.adj.append(set())
        self.roles[vid] = role
        return vid

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("self-loop")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def add_anchor(self, group: int, index: int) -> int:
        vid = self.new_vertex(("anchor", group, index))
        self.anchors[(group, index)] = vid
        self.dials[vid] = [vid]
        self.dial_of[vid] = vid
        return vid

    def _group1(self) -> tuple[int, int]:
        return self.anchors[(1, 1)], self.anchors[(1, 2)]

    def _new_helper(self) -> int:
        h = self.new_vertex(("helper",))
        self.helpers.add(h)
        a11, a12 = self._group1()
        self.add_edge(h, a11)
        self.add_edge(h, a12)
        return h

    def _add_pattern_copy(self, slot_to_vid: dict[int, int], anchor: int | None) -> dict:
        """Instantiate one copy of the forbidden pattern; unmapped slots
        become helper vertices. Helpers are wired to the two pinning anchors
        except where that would introduce a non-pattern edge inside the copy."""
        a11, a12 = self._group1()
        vids = {}
        new_helpers = []
        for slot in range(self.pattern.n):
            if slot in slot_to_vid:
                vids[slot] = slot_to_vid[slot]
            else:
                h = self.new_vertex(("helper",))
                self.helpers.add(h)
                vids[slot] = h
                new_helpers.append((slot, h))
        for u, v in self.pattern.edges:
            if vids[v] not in self.adj[vids[u]]:
                self.add_edge(vids[u], vids[v])
        copyset = set(vids.values())
        for slot, h in new_helpers:
            for a in (a11, a12):
                if a in copyset:
                    # keep the copy induced: only pattern edges inside it
                    aslot = next(s for s, x in vids.items() if x == a)
                    if not self.pattern.has_edge(slot, aslot):
                        continue
                    self.add_edge(h, a)
                else:
                    self.add_edge(h, a)
        record = {
            "anchor": anchor,
            "vertices": tuple(vids[s] for s in range(self.pattern.n)),
            "helpers": tuple(x for x in vids.values() if x in self.helpers),
        }
        self.copies.append(record)
        return record

    def fix_anchor(self, a: int) -> None:
        """budget+1 pattern copies meeting only in the anchor pin it to the
        cluster side."""
        for _ in range(self.budget + 1):
            self._add_pattern_copy({self.anchor_slot: a}, anchor=a)

    def join_dial(self, v: int, anchor: int) -> None:
        for u in self.dials[anchor]:
            self.add_edge(v, u)
        self.dials[anchor].append(v)
        self.dial_of[v] = anchor

    def make_exclusive(self, u: int, v: int, w: int | None = None) -> tuple[int, ...]:
        """Attach a fresh pattern copy through the given vertices so they can
        never all sit on the B side together. With w omitted, the two-vertex
        variant inserts a helper as the third member."""
        if w is None:
            w = self._new_helper()
        trio = (u, v, w)
        dialed = [x for x in trio if x in self.dial_of]
        if len(dialed) > 2:
            raise ValueError("at most two of the vertices may be dial vertices")
        if len(dialed) == 2 and self.dial_of[dialed[0]] != self.dial_of[dialed[1]]:
            raise ValueError("two dial vertices must share a dial")
        for i in range(3):
            for j in range(i + 1, 3):
                if trio[j] in self.adj[trio[i]]:
                    di = self.dial_of.get(trio[i])
                    if di is None or di != self.dial_of.get(trio[j]):
                        raise ValueError(
                            "an existing edge among the vertices must lie in one dial"
                        )
        if len(dialed) == 2:
            # dial mates are already adjacent; park them on an adjacent slot pair
            s0, s1 = self.adjacent_slots
            third = next(x for x in trio if x not in dialed)
            free_slot = min(s for s in range(self.pattern.n) if s not in (s0, s1))
            mapping = {s0: dialed[0], s1: dialed[1], free_slot: third}
        else:
            mapping = {0: u, 1: v, 2: w}
        self._add_pattern_copy(mapping, anchor=None)
        self.exclusives.append(trio)
        return trio

    def selection(self, p: int, q: int) -> SelectionGadget:
        """Binary selection tree over the group-p anchors: pushing the
        activator to B forces one of q choice vertices to B."""
        if q < 2 or q & (q - 1):
            raise ValueError("choice count must be a power of two, at least 2")
        depth = q.bit_length() - 1
        for i in range(1, 2 * depth + 1):
            if (p, i) not in self.anchors:
                raise ValueError(f"anchor group {p} lacks index {i}")
        activator = self.new_vertex(("activator",))
        levels = []
        for lvl in range(1, depth + 1):
            row = []
            odd_anchor = self.anchors[(p, 2 * lvl - 1)]
            even_anchor = self.anchors[(p, 2 * lvl)]
            for _ in range(1 << lvl):
                alpha = self.new_vertex(("volatile",))
                role = ("choice",) if lvl == depth else ("dial-member", even_anchor)
                beta = self.new_vertex(role)
                self.add_edge(alpha, odd_anchor)
                self.add_edge(alpha, beta)
                self.join_dial(beta, even_anchor)
                row.append((alpha, beta))
            levels.append(tuple(row))
        first = levels[0]
        self.make_exclusive(activator, first[0][0], first[1][0])
        for lvl in range(1, depth):
            for pos, (_, beta) in enumerate(levels[lvl - 1]):
                a0 = levels[lvl][2 * pos][0]
                a1 = levels[lvl][2 * pos + 1][0]
                self.make_exclusive(beta, a0, a1)
        return SelectionGadget(group=p, activator=activator, levels=tuple(levels))

    def graph(self) -> Graph:
        edges = []
        for u in range(len(self.adj)):
            for v in self.adj[u]:
                if v > u:
                    edges.append((u, v))
        return Graph(len(self.adj), edges)


def make_exclusive(builder: CompositionBuilder, u: int, v: int, w: int | None = None):
    return builder.make_exclusive(u, v, w)


def selection(builder: CompositionBuilder, p: int, q: int) -> SelectionGadget:
    return builder.selection(p, q)


@dataclass(frozen=True)
class CompositionOutput:
    graph: Graph
    d: int
    pattern: Graph
    batch: PaddedBatch
    roles: dict
    anchors: dict
    dials: dict
    helpers: VertexSet
    exclusives: tuple[tuple[int, ...], ...]
    copies: tuple[dict, ...]
    v_star: int
    instance_gadget: SelectionGadget
    phi: tuple[int, ...]
    vertex_gadgets: dict
    psi_star: dict
    psi: dict
    v_select: tuple[int, ...]
    x_vertices: dict
    w_vertices: dict

    def seed_labels(self) -> dict[int, str]:
        labels = {a: "A" for a in self.anchors.values()}
        labels.update({h: "B" for h in self.helpers})
        return labels


def compose(batch: PaddedBatch, pattern: Graph) -> CompositionOutput:
    """Build the composed instance (G, d). Anchor groups: 1 pins vertices to
    B, 2 drives instance selection, 3 links instance to vertex selection,
    3+i (i in 1..k) drive vertex selection per color, 3+k+i host vertex
    gadgets, 4+2k hosts edge gadgets; any slack between the budget formula
    and the anchors the gadgets need is absorbed by reserve anchors in group
    5+2k."""
    k, n, t, m = batch.k, batch.n, batch.t, batch.m
    logt = t.bit_length() - 1
    logn = n.bit_length() - 1
    d = budget_formula(k, n, t, m)
    structural = 2 + 2 * logt + (k + 1) + 2 * k * logn + k * n + m
    reserve = d - structural
    if reserve < 0:
        raise ValueError(
            f"budget formula ({d}) cannot cover the {structural} anchors the "
            "gadgets need; supply instances with more edge slots"
        )
    builder = CompositionBuilder(pattern, d)
    group_sizes = {1: 2, 2: 2 * logt, 3: k + 1}
    for i in range(1, k + 1):
        group_sizes[3 + i] = 2 * logn
    for i in range(1, k + 1):
        group_sizes[3 + k + i] = n
    group_sizes[4 + 2 * k] = m
    group_sizes[5 + 2 * k] = reserve
    for group in sorted(group_sizes):
        for index in range(1, group_sizes[group] + 1):
            builder.add_anchor(group, index)
    for a in sorted(builder.anchors.values()):
        builder.fix_anchor(a)

    instance_gadget = builder.selection(2, t)
    phi = instance_gadget.choices  # instance r (0-based) -> choice vertex

    vertex_gadgets = {}
    psi_star = {}
    psi = {}
    for r in range(t):
        for i in range(k):
            gadget = builder.selection(4 + i, n)
            vertex_gadgets[(r, i)] = gadget
            psi_star[(r, i)] = gadget.activator
            builder.join_dial(gadget.activator, builder.anchors[(3, i + 2)])
            classes = batch.instances[r].color_classes()
            psi[(r, i)] = dict(zip(classes[i], gadget.choices))

    v_select = []
    a31 = builder.anchors[(3, 1)]
    for r in range(t):
        vr = builder.new_vertex(("volatile",))
        builder.make_exclusive(phi[r], vr)
        builder.add_edge(vr, a31)
        for i in range(k):
            builder.add_edge(vr, psi_star[(r, i)])
        v_select.append(vr)

    w_vertices = {}
    for r in range(t):
        for j in range(m):
            anchor = builder.anchors[(4 + 2 * k, j + 1)]
            wu = builder.new_vertex(("dial-member", anchor))
            wv = builder.new_vertex(("dial-member", anchor))
            builder.join_dial(wu, anchor)
            builder.join_dial(wv, anchor)
            builder.make_exclusive(wu, wv)
            w_vertices[(r, j)] = (wu, wv)

    x_vertices = {}
    for r in range(t):
        classes = batch.instances[r].color_classes()
        for i in range(k):
            for index, v in enumerate(sorted(classes[i]), start=1):
                x = builder.new_vertex(("volatile",))
                builder.make_exclusive(psi[(r, i)][v], x)
                builder.add_edge(x, builder.anchors[(3 + k + i + 1, index)])
                x_vertices[(r, i, v)] = x

    for r in range(t):
        colors = batch.instances[r].colors
        for j, (u, v) in enumerate(batch.edge_slots[r]):
            wu, wv = w_vertices[(r, j)]
            builder.add_edge(x_vertices[(r, colors[u], u)], wu)
            builder.add_edge(x_vertices[(r, colors[v], v)], wv)

    return CompositionOutput(
        graph=builder.graph(),
        d=d,
        pattern=pattern,
        batch=batch,
        roles=dict(builder.roles),
        anchors=dict(builder.anchors),
        dials={a: tuple(sorted(members)) for a, members in builder.dials.items()},
        helpers=tuple(sorted(builder.helpers)),
        exclusives=tuple(builder.exclusives),
        copies=tuple(builder.copies),
        v_star=instance_gadget.activator,
        instance_gadget=instance_gadget,
        phi=phi,
        vertex_gadgets=vertex_gadgets,
        psi_star=psi_star,
        psi=psi,
        v_select=tuple(v_select),
        x_vertices=x_vertices,
        w_vertices=w_vertices,
    )


def _assign_gadget(assign: dict, gadget: SelectionGadget, leaf: int | None) -> None:
    """Activate a selection gadget toward the given leaf position, or
    deactivate it entirely when leaf is None."""
    depth = len(gadget.levels)
    if leaf is None:
        assign[gadget.activator] = "A"
        for row in gadget.levels:
            for alpha, beta in row:
                assign[alpha] = "B"
                assign[beta] = "A"
        return
    assign[gadget.activator] = "B"
    for lvl in range(1, depth + 1):
        on_path = leaf >> (depth - lvl)
        for pos, (alpha, beta) in enumerate(gadget.levels[lvl - 1]):
            if pos == on_path:
                assign[alpha] = "A"
                assign[beta] = "B"
            else:
                assign[alpha] = "B"
                assign[beta] = "A"


def build_witness_partition(out: CompositionOutput, s: int, iset) -> ClusterPiPartition:
    """Partition witnessing yes, assembled from a colorful independent set of
    instance s: flip the selection path to instance s, flip each color's path
    to its chosen vertex, pull the chosen x vertices into their anchors'
    clusters, and push the matching edge-gadget vertices out."""
    iset = vset(iset)
    inst = out.batch.instances[s]
    if any(not 0 <= v < inst.graph.n for v in iset):
        raise ValueError("witness vertex out of range")
    if len(iset) != out.batch.k:
        raise ValueError("witness set must pick one vertex per color")
    seen_colors = {inst.colors[v] for v in iset}
    if len(seen_colors) != out.batch.k:
        raise ValueError("witness set must pick one vertex per color")
    for u in iset:
        for v in iset:
            if u < v and inst.graph.has_edge(u, v):
                raise ValueError("witness set is not independent")
    assign: dict[int, str] = {}
    for a in out.anchors.values():
        assign[a] = "A"
    for h in out.helpers:
        assign[h] = "B"
    t, k = out.batch.t, out.batch.k
    _assign_gadget(assign, out.instance_gadget, s)
    chosen = {inst.colors[v]: v for v in iset}
    for r in range(t):
        for i in range(k):
            gadget = out.vertex_gadgets[(r, i)]
            if r == s:
                classes = out.batch.instances[r].color_classes()
                leaf = sorted(classes[i]).index(chosen[i])
                _assign_gadget(assign, gadget, leaf)
            else:
                _assign_gadget(assign, gadget, None)
    for r in range(t):
        assign[out.v_select[r]] = "A" if r == s else "B"
    for (r, i, v), x in out.x_vertices.items():
        assign[x] = "A" if r == s and v in iset else "B"
    for (r, j), (wu, wv) in out.w_vertices.items():
        u, v = out.batch.edge_slots[r][j]
        assign[wu] = "B" if r == s and u in iset else "A"
        assign[wv] = "B" if r == s and v in iset else "A"
    missing = [v for v in range(out.graph.n) if v not in assign]
    if missing:
        raise AssertionError(f"unassigned vertices: {missing[:5]}")
    a = tuple(sorted(v for v, side in assign.items() if side == "A"))
    b = tuple(sorted(v for v, side in assign.items() if side == "B"))
    return ClusterPiPartition(a=a, b=b, budget=out.d)


# -- structural audit --


def audit_invariants(out: CompositionOutput) -> list[str]:
    """Check every stated structural invariant; returns the violations."""
    bad: list[str] = []
    g = out.graph
    k = out.batch.k
    a11 = out.anchors[(1, 1)]
    a12 = out.anchors[(1, 2)]
    d_expected = budget_formula(out.batch.k, out.batch.n, out.batch.t, out.batch.m)
    if out.d != d_expected:
        bad.append(f"budget {out.d} differs from formula value {d_expected}")
    if out.d != len(out.anchors):
        bad.append("budget differs from anchor count")

    # anchor pinning: budget+1 pattern copies per anchor, disjoint off-anchor
    per_anchor: dict[int, list[dict]] = {a: [] for a in out.anchors.values()}
    for copy in out.copies:
        if copy["anchor"] is not None:
            per_anchor[copy["anchor"]].append(copy)
    for a, copies in per_anchor.items():
        if len(copies) != out.d + 1:
            bad.append(f"anchor {a} has {len(copies)} pattern copies")
        seen: set[int] = set()
        for copy in copies:
            others = [v for v in copy["vertices"] if v != a]
            if seen & set(others):
                bad.append(f"anchor {a} copies overlap off the anchor")
            seen.update(others)

    # every copy is induced: exactly the pattern's edges inside it
    pm = out.pattern
    for copy in out.copies:
        vertices = copy["vertices"]
        for su in range(pm.n):
            for sv in range(su + 1, pm.n):
                have = g.has_edge(vertices[su], vertices[sv])
                want = pm.has_edge(su, sv)
                if have != want:
                    bad.append(f"pattern copy {vertices} is not induced")
                    break

    # invariant: helper wiring and confinement
    copy_of: dict[int, dict] = {}
    for copy in out.copies:
        for h in copy["helpers"]:
            if h in copy_of:
                bad.append(f"helper {h} appears in two copies")
            copy_of[h] = copy
    for h in out.helpers:
        copy = copy_of.get(h)
        if copy is None:
            bad.append(f"helper {h} belongs to no pattern copy")
            continue
        allowed = set(copy["vertices"]) | {a11, a12}
        extra = set(g.adj[h]) - allowed
        if extra:
            bad.append(f"helper {h} has stray neighbors {sorted(extra)}")
        for a in (a11, a12):
            if a not in g.adj[h] and a not in copy["vertices"]:
                bad.append(f"helper {h} misses pinning anchor {a}")

    # invariant: dials are cliques and pairwise nonadjacent
    for anchor, members in out.dials.items():
        mm = mask_of(members)
        for v in members:
            if g.masks[v] & mm != mm ^ (1 << v):
                bad.append(f"dial of anchor {anchor} is not a clique")
                break
    dial_owner = {}
    for anchor, members in out.dials.items():
        for v in members:
            dial_owner[v] = anchor
    for v, anchor in dial_owner.items():
        for u in g.adj[v]:
            other = dial_owner.get(u)
            if other is not None and other != anchor:
                bad.append(f"dial vertices {v} and {u} of different dials adjacent")

    # invariant: the listed dials stay singletons
    singleton_groups = {2} | set(range(4, 4 + k))
    for (group, index), a in out.anchors.items():
        expected = None
        if group in singleton_groups and index % 2 == 1:
            expected = "selection"
        elif 3 + k + 1 <= group <= 3 + 2 * k:
            expected = "vertex gadget"
        elif group == 3 and index == 1:
            expected = "instance link"
        if expected and len(out.dials[a]) != 1:
            bad.append(f"{expected} dial ({group},{index}) is not a singleton")

    # invariant: volatile vertices respect dials they touch
    volatiles = [v for v, role in out.roles.items() if role[0] == "volatile"]
    for v in volatiles:
        for anchor, members in out.dials.items():
            if anchor in g.adj[v]:
                if any(u not in g.adj[v] and u != v for u in members):
                    bad.append(
                        f"volatile {v} adjacent to anchor {anchor} but not its dial"
                    )
    return bad


def check_exclusivity(out: CompositionOutput, partition) -> list[str]:
    """Tuples made exclusive must never lie entirely on the B side."""
    b = set(partition.b)
    return [
        f"exclusive tuple {trio} fully in B"
        for trio in out.exclusives
        if all(v in b for v in trio)
    ]


def format_roles(out: CompositionOutput) -> str:
    lines = []
    for v in range(out.graph.n):
        role = out.roles[v]
        lines.append(" ".join([str(v)] + [str(part) for part in role]))
    return "\n".join(lines) + "\n"


def format_seed(out: CompositionOutput) -> str:
    labels = out.seed_labels()
    lines = [f"{side} {v}" for v, side in sorted(labels.items())]
    return "\n".join(lines) + "\n"
