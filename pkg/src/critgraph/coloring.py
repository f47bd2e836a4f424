"""Exact k-colorability, chromatic number and maximum clique.

The solver is exact branch-and-bound backtracking in saturation-degree
order with a maximum clique precolored and color-class symmetry broken
(class j is available to a vertex only if class j-1 is in use). A DSATUR
greedy pass runs first so the common yes-instances return without search.
"""

from __future__ import annotations

from typing import Optional

from .graphs import Graph, GraphError, bits


def max_clique(g: Graph) -> int:
    """A maximum clique as a vertex mask."""
    n = g.n
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: -g.degree(v))
    adj = g.adj
    best_mask = 1 << order[0]
    best_size = 1

    def expand(rmask: int, rsize: int, cand: list[int]) -> None:
        nonlocal best_mask, best_size
        while cand:
            if rsize + len(cand) <= best_size:
                return
            v = cand.pop()
            nmask = rmask | (1 << v)
            ncand = [u for u in cand if adj[v] >> u & 1]
            if not ncand:
                if rsize + 1 > best_size:
                    best_size = rsize + 1
                    best_mask = nmask
            else:
                expand(nmask, rsize + 1, ncand)

    expand(0, 0, order[::-1])
    return best_mask


def _greedy_dsatur(g: Graph) -> list[int]:
    """Greedy DSATUR coloring; exact on trivial instances, an upper bound
    in general."""
    n = g.n
    colors = [-1] * n
    sat = [0] * n  # bitmask of colors seen on neighbors
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (sat[u].bit_count(), g.degree(u), -u),
        )
        c = 0
        forbidden = sat[v]
        while forbidden >> c & 1:
            c += 1
        colors[v] = c
        for u in bits(g.adj[v]):
            sat[u] |= 1 << c
    return colors


def is_k_colorable(g: Graph, k: int) -> Optional[list[int]]:
    """A proper coloring with classes 0..k-1, or None if chi(g) > k."""
    if k < 0:
        raise GraphError("k must be nonnegative")
    n = g.n
    if n == 0:
        return []
    if k == 0:
        return None
    if k >= n:
        return list(range(n))

    greedy = _greedy_dsatur(g)
    if max(greedy) < k:
        return greedy

    clique = max_clique(g)
    csize = clique.bit_count()
    if csize > k:
        return None

    adj = g.adj
    colors = [-1] * n
    sat = [0] * n
    uncolored = g.full_mask
    used = 0
    for c, v in enumerate(bits(clique)):
        colors[v] = c
        uncolored &= ~(1 << v)
        for u in bits(adj[v]):
            sat[u] |= 1 << c
        used = c + 1

    def solve(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        # most saturated first, ties by degree
        v = max(
            bits(uncolored),
            key=lambda u: (sat[u].bit_count(), adj[u].bit_count(), -u),
        )
        limit = min(k, used + 1)
        avail = ~sat[v] & ((1 << limit) - 1)
        if not avail:
            return False
        rest = uncolored & ~(1 << v)
        for c in bits(avail):
            colors[v] = c
            touched = []
            for u in bits(adj[v] & rest):
                if not sat[u] >> c & 1:
                    sat[u] |= 1 << c
                    touched.append(u)
            if solve(rest, max(used, c + 1)):
                return True
            for u in touched:
                sat[u] &= ~(1 << c)
        colors[v] = -1
        return False

    if solve(uncolored, used):
        return colors
    return None


def chromatic_number(g: Graph) -> int:
    """Least k such that g is k-colorable; 0 for the empty graph."""
    if g.n == 0:
        return 0
    k = max_clique(g).bit_count()
    while is_k_colorable(g, k) is None:
        k += 1
    return k


def verify_coloring(g: Graph, colors: list[int], k: int) -> bool:
    """True iff ``colors`` is a proper coloring of g using classes < k."""
    if len(colors) != g.n:
        raise GraphError("coloring length does not match vertex count")
    if any(c < 0 or c >= k for c in colors):
        return False
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return False
    return True
