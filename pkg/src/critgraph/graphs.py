"""Immutable bitmask graphs and constructors for the named graphs used throughout.

Vertices are integers 0..n-1 and every vertex set is a plain int bitmask.
Adjacency is stored as one mask per vertex, which keeps all the hot
operations (neighborhood intersection, completeness tests) single-word.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction input."""


class CapacityError(GraphError):
    """Vertex count would exceed the 64-vertex capacity."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """An immutable labeled simple graph on at most 64 vertices."""

    __slots__ = ("n", "adj", "_canon", "_hash")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"adjacency mask of {v} has bits >= n")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
        for v in range(n):
            for u in bits(adj[v]):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_canon", None)
        object.__setattr__(self, "_hash", hash((n, adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"

    # -- basic queries -------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    # -- derived graphs ------------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(
            self.n,
            [(~row & full) & ~(1 << v) for v, row in enumerate(self.adj)],
        )

    def induced_subgraph(self, s: int) -> "Graph":
        """Subgraph induced by mask ``s``, relabeled 0.. in ascending vertex order."""
        if s & ~self.full_mask:
            raise GraphError("vertex set outside range")
        keep = list(bits(s))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(mask_of(pos[u] for u in bits(self.adj[v] & s)))
        return Graph(len(keep), adj)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph(self.full_mask & ~(1 << v))

    def add_vertex(self, neighbors: int) -> "Graph":
        """New graph with vertex ``self.n`` adjacent exactly to ``neighbors``."""
        if self.n >= MAX_VERTICES:
            raise CapacityError("cannot add vertex: 64-vertex capacity reached")
        if neighbors & ~self.full_mask:
            raise GraphError("neighbor set outside existing vertices")
        bit = 1 << self.n
        adj = [
            row | bit if neighbors >> v & 1 else row for v, row in enumerate(self.adj)
        ]
        adj.append(neighbors)
        return Graph(self.n + 1, adj)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u}-{v}")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Relabel so new vertex i is old vertex ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise GraphError("order is not a permutation of the vertices")
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = []
        for v in order:
            adj.append(mask_of(pos[u] for u in bits(self.adj[v])))
        return Graph(self.n, adj)

    def components(self) -> list[int]:
        """Connected components as vertex masks, ordered by smallest vertex."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                grow = 0
                for u in bits(frontier):
                    grow |= self.adj[u]
                frontier = grow & ~comp
                comp |= grow
            out.append(comp)
            seen |= comp
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph with the given edges; duplicates collapse, loops are rejected."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def path(t: int) -> Graph:
    if t < 1:
        raise GraphError("path needs at least one vertex")
    return from_edge_list(t, [(i, i + 1) for i in range(t - 1)])


def cycle(t: int) -> Graph:
    if t < 3:
        raise GraphError("cycle needs at least three vertices")
    return from_edge_list(t, [(i, (i + 1) % t) for i in range(t)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def antihole(m: int) -> Graph:
    """Complement of the natural cycle 0-1-..-(m-1)-0."""
    if m < 5:
        raise GraphError("antihole needs at least five vertices")
    return cycle(m).complement()


def diamond() -> Graph:
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def dart() -> Graph:
    """Diamond 0-1-2-3 (0 and 2 of degree three) plus pendant 4 on vertex 2."""
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 4)])


def named_graph(name: str) -> Graph:
    """Build a graph from a textual name such as ``"cycle 5"`` or ``"dart"``."""
    parts = name.split()
    kind = parts[0].lower()
    if kind in ("dart", "diamond"):
        if len(parts) != 1:
            raise GraphError(f"{kind} takes no parameter")
        return dart() if kind == "dart" else diamond()
    if len(parts) != 2:
        raise GraphError(f"expected '{kind} <int>'")
    try:
        m = int(parts[1])
    except ValueError as exc:
        raise GraphError(f"bad parameter in {name!r}") from exc
    builders = {"path": path, "cycle": cycle, "complete": complete, "antihole": antihole}
    if kind not in builders:
        raise GraphError(f"unknown graph name {kind!r}")
    return builders[kind](m)
