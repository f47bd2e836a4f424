"""Verifiers for k-vertex-criticality and family-relative k-criticality,
plus the two structural obstructions every vertex-critical graph must
avoid (anticomplete X/Y pairs with nested coloring demand, and
homogeneous-set components that fail to be critical themselves)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .coloring import chromatic_number, is_k_colorable
from .detect import find_induced, is_family_free, is_homogeneous
from .graphs import Graph, GraphError, bits, mask_of


@dataclass(frozen=True)
class CriticalityReport:
    chi: int
    vertex_critical: bool
    family_critical: Optional[bool]
    witness: Optional[object]


def is_k_vertex_critical(g: Graph, k: int) -> tuple[bool, Optional[object]]:
    """chi(g) = k and every single-vertex deletion is (k-1)-colorable.

    The witness is ("chi", actual) on a chromatic mismatch or
    ("vertex", v) for a deletable vertex.
    """
    if k < 1:
        raise GraphError("k must be positive")
    if is_k_colorable(g, k - 1) is not None:
        return (False, ("chi", chromatic_number(g)))
    if is_k_colorable(g, k) is None:
        return (False, ("chi", chromatic_number(g)))
    for v in range(g.n):
        if is_k_colorable(g.delete_vertex(v), k - 1) is None:
            return (False, ("vertex", v))
    return (True, None)


def _edge_index(g: Graph) -> list[tuple[int, int]]:
    return sorted(g.edges())


def is_k_critical_family(
    g: Graph, k: int, family: Sequence[Graph]
) -> tuple[bool, Optional[object]]:
    """chi(g) = k and no proper subgraph of g is both family-free and
    non-(k-1)-colorable.

    Vertex-criticality covers every non-spanning subgraph (any of those sits
    inside some g - v), so only spanning edge-deleted subgraphs remain. A
    witness subgraph is searched as a hitting-set problem: each edge
    deletion may create induced forbidden patterns, and a pattern present
    now survives into every deeper subgraph unless one of its own edges is
    deleted (non-edges only accumulate), so at a non-family-free node it
    suffices to branch on the edges of a single discovered pattern. Descent
    is pruned once chi drops below k (chi is monotone under edge deletion),
    which never cuts off a witness: any subset of a witness's deletion set
    still leaves a non-(k-1)-colorable graph.
    """
    if not is_family_free(g, family):
        raise GraphError("graph is not family-free")
    ok, witness = is_k_vertex_critical(g, k)
    if not ok:
        return (False, witness)

    edges = _edge_index(g)
    index = {e: i for i, e in enumerate(edges)}
    visited: set[int] = set()

    def pattern_edges(h: Graph) -> Optional[list[int]]:
        for pat in family:
            hit = find_induced(h, pat)
            if hit is None:
                continue
            out = []
            for i in range(pat.n):
                for j in range(i + 1, pat.n):
                    if pat.has_edge(i, j):
                        u, v = hit[i], hit[j]
                        out.append(index[(min(u, v), max(u, v))])
            return out
        return None

    def descend(h: Graph, present: int, branch: list[int]) -> Optional[object]:
        for i in branch:
            if not present >> i & 1:
                continue
            child_mask = present & ~(1 << i)
            if child_mask in visited:
                continue
            visited.add(child_mask)
            u, v = edges[i]
            child = h.delete_edge(u, v)
            if is_k_colorable(child, k - 1) is not None:
                continue  # whole down-set is (k-1)-colorable
            pat = pattern_edges(child)
            if pat is None:
                return ("edges", [edges[j] for j in bits(child_mask)])
            bad = descend(child, child_mask, pat)
            if bad is not None:
                return bad
        return None

    witness = descend(g, (1 << len(edges)) - 1, list(range(len(edges))))
    if witness is not None:
        return (False, witness)
    return (True, None)


def criticality_report(
    g: Graph, k: int, family: Optional[Sequence[Graph]] = None
) -> CriticalityReport:
    chi = chromatic_number(g)
    vc, witness = is_k_vertex_critical(g, k)
    fc = None
    if vc and family is not None and is_family_free(g, family):
        fc, fwitness = is_k_critical_family(g, k, family)
        if not fc:
            witness = fwitness
    return CriticalityReport(chi, vc, fc, witness)


def check_xy_obstruction(g: Graph, x: int, y: int) -> bool:
    """Whether (x, y) is an obstruction pair: anticomplete, with
    chi(g[x]) <= chi(g[y]) and y complete to N(x). No vertex-critical
    graph contains such a pair."""
    if x == 0 or y == 0:
        raise GraphError("x and y must be nonempty")
    if x & y:
        raise GraphError("x and y must be disjoint")
    nx = 0
    for v in bits(x):
        if g.adj[v] & y:
            return False  # not anticomplete
        nx |= g.adj[v]
    nx &= ~x
    if chromatic_number(g.induced_subgraph(x)) > chromatic_number(
        g.induced_subgraph(y)
    ):
        return False
    for v in bits(y):
        if nx & ~(g.adj[v] | (1 << v)):
            return False  # y misses a neighbor of x
    return True


def scan_xy_obstruction(
    g: Graph, size_cap: int = 2
) -> Optional[tuple[int, int]]:
    """First obstruction pair with |x|, |y| <= size_cap, or None. A bounded
    validation scan, not a completeness claim; size 1 subsumes the
    comparable-vertex check."""
    if size_cap < 1:
        raise GraphError("size_cap must be positive")
    verts = range(g.n)
    subsets = [
        mask_of(c)
        for size in range(1, size_cap + 1)
        for c in combinations(verts, size)
    ]
    for x in subsets:
        for y in subsets:
            if x & y:
                continue
            if check_xy_obstruction(g, x, y):
                return (x, y)
    return None


def check_homogeneous_components(
    g: Graph, k: int, s: int
) -> list[tuple[int, int, bool]]:
    """For each component A of g[s] with chi(A) = m < k, whether A is
    m-vertex-critical. Entries are (component mask, m, verdict)."""
    homogeneous, _ = is_homogeneous(g, s)
    if not homogeneous:
        raise GraphError("s is not homogeneous")
    sub = g.induced_subgraph(s)
    keep = list(bits(s))
    out = []
    for comp in sub.components():
        comp_graph = sub.induced_subgraph(comp)
        m = chromatic_number(comp_graph)
        if m >= k:
            continue
        verdict, _ = is_k_vertex_critical(comp_graph, m)
        out.append((mask_of(keep[v] for v in bits(comp)), m, verdict))
    return out
