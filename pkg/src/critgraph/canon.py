"""Canonical labeling by partition refinement plus exhaustive cell branching.

The canonical key of a graph is the graph6 encoding of the relabeling whose
upper-triangle bit string (in graph6 column order) is lexicographically
smallest among the relabelings surviving refinement. Refinement keeps the
branch factor small for the graphs this project handles (<= 19 vertices);
twin-class deduplication collapses the factorial blowup that cliques and
blown-up modules would otherwise cause.
"""

from __future__ import annotations

from .graph6 import encode
from .graphs import Graph, bits


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition of vertex masks.

    Every cell is split by neighbor counts into the splitter cell until
    stable; sub-cells are ordered by ascending count, which keeps the
    procedure label-invariant.
    """
    cells = list(cells)
    queue = list(cells)
    while queue:
        splitter = queue.pop()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if cell.bit_count() > 1:
                groups: dict[int, int] = {}
                for v in bits(cell):
                    c = (adj[v] & splitter).bit_count()
                    groups[c] = groups.get(c, 0) | (1 << v)
                if len(groups) > 1:
                    parts = [groups[c] for c in sorted(groups)]
                    cells[i : i + 1] = parts
                    queue.extend(parts)
                    i += len(parts)
                    continue
            i += 1
    return cells


def _twin_class(g: Graph) -> list[int]:
    """Class id per vertex; two vertices share a class iff swapping them
    (fixing everything else) is an automorphism."""
    n = g.n
    ids = list(range(n))
    keys_open: dict[int, int] = {}
    keys_closed: dict[int, int] = {}
    for v in range(n):
        ko = g.adj[v]
        kc = g.adj[v] | (1 << v)
        if ko in keys_open:
            ids[v] = ids[keys_open[ko]]
        elif kc in keys_closed:
            ids[v] = ids[keys_closed[kc]]
        keys_open.setdefault(ko, v)
        keys_closed.setdefault(kc, v)
    return ids


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle bit string of the relabeled graph, MSB first, with a
    leading sentinel bit so leading zeros compare correctly."""
    code = 1
    for col in range(1, len(order)):
        row_adj = adj[order[col]]
        for row in range(col):
            code = (code << 1) | (row_adj >> order[row] & 1)
    return code


def canonical_order(g: Graph) -> list[int]:
    """A canonical vertex order (new index -> old vertex)."""
    n = g.n
    if n <= 1:
        return list(range(n))
    adj = g.adj
    twins = _twin_class(g)
    best: list[int] | None = None
    best_code = None

    def walk(cells: list[int]) -> None:
        nonlocal best, best_code
        target = -1
        for i, cell in enumerate(cells):
            if cell.bit_count() > 1:
                target = i
                break
        if target < 0:
            order = [cell.bit_length() - 1 for cell in cells]
            code = _code(adj, order)
            if best_code is None or code < best_code:
                best_code = code
                best = order
            return
        cell = cells[target]
        seen_classes = set()
        for v in bits(cell):
            tc = twins[v]
            if tc in seen_classes:
                continue
            seen_classes.add(tc)
            child = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1 :]
            walk(_refine(adj, child))

    degree_groups: dict[int, int] = {}
    for v in range(n):
        d = adj[v].bit_count()
        degree_groups[d] = degree_groups.get(d, 0) | (1 << v)
    initial = [degree_groups[d] for d in sorted(degree_groups)]
    walk(_refine(adj, initial))
    assert best is not None
    return best


def canonical_form(g: Graph) -> bytes:
    """Order-invariant key: graph6 of the canonically relabeled graph."""
    cached = g._canon
    if cached is not None:
        return cached
    key = encode(g.relabel(canonical_order(g)))
    object.__setattr__(g, "_canon", key)
    return key


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_order(g))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return canonical_form(a) == canonical_form(b)
