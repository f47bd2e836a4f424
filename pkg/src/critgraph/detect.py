"""Induced-subgraph containment and the special configurations the
(P5,dart)-free analysis revolves around: C5s, odd antiholes, comparable
pairs and homogeneous sets."""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .graphs import Graph, GraphError, bits, mask_of


def find_induced(
    host: Graph, pattern: Graph, require: Optional[int] = None
) -> Optional[tuple[int, ...]]:
    """An injective map (position i -> host vertex playing pattern vertex i)
    realizing ``pattern`` as an induced subgraph of ``host``, or None.

    When ``require`` is given, only embeddings whose image contains that
    host vertex are searched; this is the incremental hook used after a
    vertex addition.
    """
    p, n = pattern.n, host.n
    if p < 1:
        raise GraphError("pattern must have at least one vertex")
    if p > n:
        return None
    # High-degree pattern vertices first: their candidate sets shrink fastest.
    order = sorted(range(p), key=lambda v: -pattern.degree(v))
    pdeg = [pattern.degree(v) for v in order]
    hdeg = [host.degree(v) for v in range(n)]
    image = [0] * p  # image[i] = host vertex for pattern vertex order[i]
    full = host.full_mask

    def extend(i: int, used: int) -> Optional[tuple[int, ...]]:
        if i == p:
            if require is not None and not used >> require & 1:
                return None
            out = [0] * p
            for j, pv in enumerate(order):
                out[pv] = image[j]
            return tuple(out)
        cand = full & ~used
        pv = order[i]
        for j in range(i):
            if pattern.has_edge(pv, order[j]):
                cand &= host.adj[image[j]]
            else:
                cand &= ~host.adj[image[j]]
            if not cand:
                return None
        need = pdeg[i]
        for w in bits(cand):
            if hdeg[w] < need:
                continue
            image[i] = w
            got = extend(i + 1, used | (1 << w))
            if got is not None:
                return got
        return None

    return extend(0, 0)


def contains_induced(host: Graph, pattern: Graph) -> bool:
    return find_induced(host, pattern) is not None


def is_family_free(g: Graph, family: Sequence[Graph]) -> bool:
    """True iff no family member occurs as an induced subgraph of g."""
    return all(find_induced(g, h) is None for h in family)


def new_vertex_keeps_family_free(g: Graph, family: Sequence[Graph]) -> bool:
    """Incremental check after ``add_vertex``: assuming the graph minus its
    last vertex is family-free, test only embeddings through that vertex."""
    v = g.n - 1
    return all(find_induced(g, h, require=v) is None for h in family)


def find_induced_c5(g: Graph) -> Optional[int]:
    """A vertex mask inducing a 5-cycle, or None."""
    from .graphs import cycle

    hit = find_induced(g, cycle(5))
    return mask_of(hit) if hit is not None else None


def induced_c5_orderings(g: Graph) -> Iterator[tuple[int, ...]]:
    """All cyclic orderings (v1..v5) of induced C5s, one per 5-cycle up to
    rotation/reflection (anchored at the smallest vertex, smaller neighbor
    second)."""
    from itertools import combinations

    for sub in combinations(range(g.n), 5):
        sg = g.induced_subgraph(mask_of(sub))
        if any(sg.degree(v) != 2 for v in range(5)):
            continue
        # trace the cycle from vertex 0 toward its smaller neighbor
        a, b = bits(sg.adj[0])
        seq = [0, min(a, b)]
        while len(seq) < 5:
            nxt = sg.adj[seq[-1]] & ~mask_of(seq)
            seq.append(nxt.bit_length() - 1)
        if not sg.has_edge(seq[-1], 0):
            continue  # degree-2 regular but disconnected (impossible on 5)
        yield tuple(sub[i] for i in seq)


def find_induced_antihole(g: Graph, m: int) -> Optional[tuple[int, ...]]:
    """An ordering v1..vm with v_i ~ v_j iff the cyclic index distance
    exceeds 1 (an induced antihole), or None."""
    if m < 7 or m % 2 == 0:
        raise GraphError("antihole order must be odd and >= 7")
    from .graphs import cycle

    hit = find_induced(g, cycle(m).complement())
    if hit is None:
        return None
    # The pattern is the complement of the natural cycle, so the natural
    # pattern order already realizes the adjacency rule.
    return hit


def induced_antihole_orderings(g: Graph, m: int) -> Iterator[tuple[int, ...]]:
    """Cyclic orderings of all induced m-antiholes, one per vertex set."""
    from itertools import combinations

    if m < 7 or m % 2 == 0:
        raise GraphError("antihole order must be odd and >= 7")
    for sub in combinations(range(g.n), m):
        sg = g.induced_subgraph(mask_of(sub))
        if any(sg.degree(v) != m - 3 for v in range(m)):
            continue
        comp = sg.complement()
        if not comp.is_connected():
            continue
        a, b = bits(comp.adj[0])
        seq = [0, min(a, b)]
        ok = True
        while len(seq) < m:
            nxt = comp.adj[seq[-1]] & ~mask_of(seq)
            if nxt.bit_count() != 1:
                ok = False
                break
            seq.append(nxt.bit_length() - 1)
        if ok and comp.has_edge(seq[-1], 0):
            yield tuple(sub[i] for i in seq)


def comparable_pair(g: Graph) -> Optional[tuple[int, int]]:
    """A nonadjacent pair (u, v) with N(u) contained in N(v), or None."""
    for u in range(g.n):
        au = g.adj[u]
        for v in range(g.n):
            if v == u or au >> v & 1:
                continue
            if au & ~g.adj[v] == 0:
                return (u, v)
    return None


def is_homogeneous(g: Graph, s: int) -> tuple[bool, Optional[int]]:
    """Whether no outside vertex is mixed on ``s``; the witness is a mixed
    vertex when one exists."""
    if s == 0 or s == g.full_mask:
        raise GraphError("homogeneous test needs a nonempty proper subset")
    if s & ~g.full_mask:
        raise GraphError("vertex set outside range")
    for w in bits(g.full_mask & ~s):
        inter = g.adj[w] & s
        if inter != 0 and inter != s:
            return (False, w)
    return (True, None)
