"""Core graph machinery: dense-id undirected graphs, the edge-list file
format, induced-subgraph enumeration for small patterns, and finite
forbidden-subgraph properties."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

VertexSet = tuple  # sorted tuple of distinct vertex ids

MAX_PATTERN_ORDER = 8


class GraphFormatError(ValueError):
    """Malformed graph or property file."""


class GuardError(ValueError):
    """Input exceeds a guard bound meant to keep runs desk-scale."""


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vset(vertices: Iterable[int]) -> VertexSet:
    return tuple(sorted(set(vertices)))


class Graph:
    """Immutable simple undirected graph on vertex ids 0..n-1.

    Adjacency is kept both as frozensets and as per-vertex bitmasks; the
    bitmask form is what the kernelization and solver loops run on.
    """

    __slots__ = ("n", "edges", "adj", "masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            norm.append((u, v))
        norm.sort()
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        adj = [set() for _ in range(n)]
        masks = [0] * n
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.adj = tuple(frozenset(s) for s in adj)
        self.masks = tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- small constructors used throughout tests and fixtures --


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges)


P3 = path_graph(3)


# -- file format --


def parse_graph(text) -> Graph:
    """Parse the edge-list format: header ``n m``, then m lines ``u v`` with
    u < v. Lines starting with ``#`` are ignored; errors carry the physical
    line number."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header = None
    header_line = 0
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphFormatError(f"malformed header, line {lineno}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(f"malformed header, line {lineno}") from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"malformed header, line {lineno}")
            header = (n, m)
            header_line = lineno
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge, line {lineno}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed edge, line {lineno}") from None
        n = header[0]
        if u == v:
            raise GraphFormatError(f"self-loop, line {lineno}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range, line {lineno}")
        if u > v:
            raise GraphFormatError(f"malformed edge (expected u < v), line {lineno}")
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge, line {lineno}")
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("malformed header, line 1")
    if len(edges) != header[1]:
        raise GraphFormatError(
            f"expected {header[1]} edges, found {len(edges)} (header line {header_line})"
        )
    return Graph(header[0], edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# -- induced subgraphs and pattern matching --


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Induced subgraph on vertex set s plus the remap table: new id i
    corresponds to old id table[i] (old ids in ascending order)."""
    table = vset(s)
    for v in table:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex id {v} out of range")
    index = {v: i for i, v in enumerate(table)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph(len(table), edges), table


def _placement_order(pattern: Graph, first: int | None = None) -> list[int]:
    # grow connected to already-placed vertices where possible
    order: list[int] = []
    placed: set[int] = set()
    if first is not None:
        order.append(first)
        placed.add(first)
    while len(order) < pattern.n:
        cands = [v for v in range(pattern.n) if v not in placed]
        attached = [v for v in cands if pattern.adj[v] & placed]
        pool = attached or cands
        v = max(pool, key=lambda x: (len(pattern.adj[x]), -x))
        order.append(v)
        placed.add(v)
    return order


def _iter_embeddings(
    g: Graph,
    pattern: Graph,
    candidate_mask: int | None = None,
    anchor: tuple[int, int] | None = None,
) -> Iterator[int]:
    """Yield masks of induced embeddings of pattern into g (one per injective
    map found; callers deduplicate). anchor = (g vertex, pattern slot) pins a
    vertex into the image."""
    h = pattern.n
    if h == 0:
        yield 0
        return
    if candidate_mask is None:
        candidate_mask = g.full_mask
    if anchor is not None:
        gv, slot = anchor
        order = _placement_order(pattern, first=slot)
    else:
        order = _placement_order(pattern)
    gm = g.masks
    pm = pattern.masks
    img = [0] * h

    def rec(i: int, used: int) -> Iterator[int]:
        if i == h:
            yield used
            return
        p = order[i]
        cand = candidate_mask & ~used
        for j in range(i):
            q = order[j]
            if pm[p] >> q & 1:
                cand &= gm[img[j]]
            else:
                cand &= ~gm[img[j]]
        for v in bits(cand):
            img[i] = v
            yield from rec(i + 1, used | (1 << v))

    if anchor is not None:
        gv = anchor[0]
        if not candidate_mask >> gv & 1:
            return
        img[0] = gv
        yield from rec(1, 1 << gv)
    else:
        yield from rec(0, 0)


def enumerate_induced_embeddings(
    g: Graph, pattern: Graph, limit: int | None = None
) -> list[VertexSet]:
    """All vertex sets of g inducing a copy of pattern, deduplicated and
    lexicographically sorted; truncated at limit when given."""
    if pattern.n > MAX_PATTERN_ORDER:
        raise GuardError(
            f"pattern too large ({pattern.n} > {MAX_PATTERN_ORDER} vertices)"
        )
    found = {m for m in _iter_embeddings(g, pattern)}
    out = sorted(tuple(bits(m)) for m in found)
    if limit is not None:
        out = out[:limit]
    return out


def has_induced(g: Graph, pattern: Graph, candidate_mask: int | None = None) -> bool:
    for _ in _iter_embeddings(g, pattern, candidate_mask=candidate_mask):
        return True
    return False


def has_induced_at(g: Graph, pattern: Graph, v: int, candidate_mask: int) -> bool:
    """Is there an induced copy of pattern inside candidate_mask using v?"""
    for slot in range(pattern.n):
        for _ in _iter_embeddings(g, pattern, candidate_mask, anchor=(v, slot)):
            return True
    return False


def connected_component_masks(g: Graph, within: int | None = None) -> list[int]:
    if within is None:
        within = g.full_mask
    comps = []
    rest = within
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.masks[u] & within
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_component_masks(g)) == 1


def _is_clique_mask(masks, comp: int) -> bool:
    for v in bits(comp):
        if masks[v] & comp != comp ^ (1 << v):
            return False
    return True


def is_cluster_graph(g: Graph) -> tuple[bool, int | None]:
    """True plus the component count iff every connected component is a
    clique; the empty graph counts 0 clusters."""
    comps = connected_component_masks(g)
    for comp in comps:
        if not _is_clique_mask(g.masks, comp):
            return False, None
    return True, len(comps)


@dataclass(frozen=True)
class PiSpec:
    """A graph property given by connected forbidden induced subgraphs plus
    an optional maximum-degree bound."""

    patterns: tuple[Graph, ...]
    max_degree: int | None = None

    def __post_init__(self):
        for p in self.patterns:
            if p.n < 1:
                raise ValueError("patterns must have at least one vertex")
            if not is_connected(p):
                raise ValueError("patterns must be connected")
        if self.max_degree is not None and self.max_degree < 0:
            raise ValueError("max degree must be nonnegative")


def satisfies_pi(g: Graph, pi: PiSpec) -> bool:
    if pi.max_degree is not None:
        if any(len(a) > pi.max_degree for a in g.adj):
            return False
    return not any(has_induced(g, p) for p in pi.patterns)


PI_UNIVERSAL = PiSpec(())
PI_EDGELESS = PiSpec((), max_degree=0)
PI_MAX_DEGREE_ONE = PiSpec((), max_degree=1)
PI_CLUSTER = PiSpec((P3,))


def parse_pispec(text) -> PiSpec:
    """Property file: ``delta <D>|delta none``, ``patterns <count>``, then
    each pattern as a ``pattern`` line followed by a graph block."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [
        (no, ln.strip())
        for no, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines or not lines[0][1].startswith("delta"):
        raise GraphFormatError("expected 'delta' line")
    parts = lines[0][1].split()
    if len(parts) != 2:
        raise GraphFormatError(f"malformed delta line, line {lines[0][0]}")
    max_degree = None if parts[1] == "none" else int(parts[1])
    if len(lines) < 2 or not lines[1][1].startswith("patterns"):
        raise GraphFormatError("expected 'patterns' line")
    count = int(lines[1][1].split()[1])
    patterns = []
    i = 2
    for _ in range(count):
        if i >= len(lines) or lines[i][1] != "pattern":
            raise GraphFormatError("expected 'pattern' line")
        i += 1
        if i >= len(lines):
            raise GraphFormatError("missing pattern header")
        header = lines[i][1].split()
        if len(header) != 2:
            raise GraphFormatError(f"malformed header, line {lines[i][0]}")
        m = int(header[1])
        block = "\n".join(ln for _, ln in lines[i : i + 1 + m])
        patterns.append(parse_graph(block))
        i += 1 + m
    if i != len(lines):
        raise GraphFormatError("trailing content after patterns")
    return PiSpec(tuple(patterns), max_degree)


def serialize_pispec(pi: PiSpec) -> str:
    out = ["delta none" if pi.max_degree is None else f"delta {pi.max_degree}"]
    out.append(f"patterns {len(pi.patterns)}")
    for p in pi.patterns:
        out.append("pattern")
        out.append(serialize_graph(p).rstrip("\n"))
    return "\n".join(out) + "\n"
