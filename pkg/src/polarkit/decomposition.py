"""Nice clique decompositions: ordered partitions of a vertex set into
large (>=3), edge (=2), and vertex (=1) cliques with suffix-maximality and a
triangle-free tail."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, VertexSet, bits, mask_of

LARGE = "large"
EDGE = "edge"
VERTEX = "vertex"

_KIND_RANK = {LARGE: 0, EDGE: 1, VERTEX: 2}


@dataclass(frozen=True)
class CliqueDecomposition:
    cliques: tuple[VertexSet, ...]
    kinds: tuple[str, ...]

    @property
    def r(self) -> int:
        return len(self.cliques)

    def of_kind(self, kind: str) -> tuple[VertexSet, ...]:
        return tuple(c for c, k in zip(self.cliques, self.kinds) if k == kind)

    def __iter__(self):
        return iter(zip(self.kinds, self.cliques))


def _decompose_masks(masks, edge_list, free: int) -> list[tuple[str, int]]:
    """Mask-level decomposition core. edge_list must be lexicographically
    sorted; ties everywhere go to the lowest vertex id."""
    out: list[tuple[str, int]] = []
    # large cliques: first triangle in edge order, extended greedily
    while True:
        seed = None
        for u, v in edge_list:
            if free >> u & 1 and free >> v & 1:
                common = masks[u] & masks[v] & free
                if common:
                    w = (common & -common).bit_length() - 1
                    seed = (u, v, w)
                    break
        if seed is None:
            break
        u, v, w = seed
        clique = (1 << u) | (1 << v) | (1 << w)
        cand = masks[u] & masks[v] & masks[w] & free
        while cand:
            x = (cand & -cand).bit_length() - 1
            clique |= 1 << x
            cand &= masks[x]
        out.append((LARGE, clique))
        free &= ~clique
    # edge cliques: greedy maximal matching in edge order
    for u, v in edge_list:
        if free >> u & 1 and free >> v & 1:
            pair = (1 << u) | (1 << v)
            out.append((EDGE, pair))
            free &= ~pair
    # vertex cliques: what remains is independent
    for v in bits(free):
        out.append((VERTEX, 1 << v))
    return out


def nice_clique_decomposition(g: Graph, excluded=()) -> CliqueDecomposition:
    """Decompose V(g) minus excluded into ordered large/edge/vertex cliques.
    Deterministic; an empty remainder yields an empty decomposition."""
    ex_mask = mask_of(excluded)
    if ex_mask & ~g.full_mask:
        raise ValueError("excluded vertices out of range")
    raw = _decompose_masks(g.masks, g.edges, g.full_mask & ~ex_mask)
    return CliqueDecomposition(
        cliques=tuple(tuple(bits(m)) for _, m in raw),
        kinds=tuple(kind for kind, _ in raw),
    )


def verify_decomposition(
    g: Graph, dec: CliqueDecomposition, excluded=()
) -> tuple[bool, str | None]:
    """Re-check every defining property from scratch; on failure name the
    first violated one."""
    masks = g.masks
    target = g.full_mask & ~mask_of(excluded)
    cmasks = [mask_of(c) for c in dec.cliques]
    union = 0
    for cm in cmasks:
        if cm & union:
            return False, "partition violated: cliques overlap"
        union |= cm
    if union != target:
        return False, "partition violated: cliques do not cover the vertex set"
    for i, cm in enumerate(cmasks):
        if not all(masks[v] & cm == cm ^ (1 << v) for v in bits(cm)):
            return False, f"clique violated: part {i} is not a clique"
        size = cm.bit_count()
        kind = dec.kinds[i]
        want = LARGE if size >= 3 else EDGE if size == 2 else VERTEX
        if kind != want:
            return False, f"kind mismatch at part {i}: {kind} has {size} vertices"
    ranks = [_KIND_RANK[k] for k in dec.kinds]
    if any(a > b for a, b in zip(ranks, ranks[1:])):
        return False, "ordering violated: kinds out of large/edge/vertex order"
    # property (ii): each part maximal within the suffix
    suffix = 0
    for i in range(len(cmasks) - 1, -1, -1):
        cm = cmasks[i]
        if i < len(cmasks) - 1:
            for v in bits(suffix):
                if masks[v] & cm == cm:
                    return False, f"maximality (ii) violated at part {i}"
        suffix |= cm
    # property (iii): edge + vertex cliques induce no triangle
    tail = 0
    for cm, kind in zip(cmasks, dec.kinds):
        if kind != LARGE:
            tail |= cm
    for v in bits(tail):
        nb = masks[v] & tail
        for u in bits(nb):
            if u > v and masks[u] & nb & ~(1 << v):
                return False, "property (iii) violated: small cliques contain a triangle"
    # consequence: vertex cliques form an independent set
    singles = 0
    for cm, kind in zip(cmasks, dec.kinds):
        if kind == VERTEX:
            singles |= cm
    for v in bits(singles):
        if masks[v] & singles:
            return False, "vertex cliques are not independent"
    return True, None
