"""Vertex partitions around an induced 5-cycle or odd antihole, and the
machine checks of the structural statements that hold for every
(P5,dart)-free graph around such a configuration.

For a fixed induced C5 with cyclic order v1..v5 (one-based to match the
usual convention, zero-based internally), every outside vertex of a
(P5,dart)-free graph falls into one of the classes

  S0      no neighbor on C
  S2(i)   neighbors exactly {v_{i-1}, v_{i+1}}
  S3^1(i) neighbors exactly {v_{i-1}, v_i, v_{i+1}}
  S3^2(i) neighbors exactly {v_{i-2}, v_i, v_{i+2}}
  S4(i)   neighbors exactly C minus v_i
  S5      all of C,

indices mod 5. A vertex outside these types witnesses an induced P5 or
dart through C (raised as ClassViolation). The antihole partition keys
classes by the exact neighborhood subset X of the antihole.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .detect import is_homogeneous
from .graphs import Graph, GraphError, bits, mask_of


class ClassViolation(GraphError):
    """An outside vertex whose C-neighborhood matches no allowed class."""

    def __init__(self, vertex: int, trace: tuple[int, ...]):
        self.vertex = vertex
        self.trace = trace
        super().__init__(
            f"vertex {vertex} has hole neighborhood {trace} outside the "
            "allowed classes (the graph is not (P5,dart)-free)"
        )


@dataclass(frozen=True)
class PartitionC5:
    c: tuple[int, int, int, int, int]
    s0: int
    s5: int
    s2: tuple[int, int, int, int, int]
    s31: tuple[int, int, int, int, int]
    s32: tuple[int, int, int, int, int]
    s4: tuple[int, int, int, int, int]

    def union(self, classes) -> int:
        m = 0
        for x in classes:
            m |= x
        return m


@dataclass(frozen=True)
class PartitionAntihole:
    c: tuple[int, ...]
    classes: dict[frozenset[int], int]  # X (hole vertices) -> S(X) mask
    by_size: dict[int, int]

    @property
    def t(self) -> int:
        return (len(self.c) - 1) // 2


@dataclass(frozen=True)
class PropertyCheck:
    prop: str
    holds: bool
    witness: Optional[tuple[int, ...]]

    def line(self) -> str:
        if self.holds:
            return f"P{self.prop} OK"
        return f"P{self.prop} FAIL witness={','.join(map(str, self.witness))}"


@dataclass(frozen=True)
class PropertyReport:
    checks: tuple[PropertyCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def violations(self) -> list[PropertyCheck]:
        return [c for c in self.checks if not c.holds]

    def text(self) -> str:
        return "\n".join(c.line() for c in self.checks)


def _check_induced_c5(g: Graph, c: Sequence[int]) -> None:
    if len(c) != 5 or len(set(c)) != 5:
        raise GraphError("c must list five distinct vertices")
    for i in range(5):
        for j in range(i + 1, 5):
            want = (j - i) % 5 in (1, 4)
            if g.has_edge(c[i], c[j]) != want:
                raise GraphError("c is not an induced C5 in cyclic order")


def partition_around_c5(g: Graph, c: Sequence[int]) -> PartitionC5:
    """Classify every vertex outside the induced C5 ``c`` (cyclic order)."""
    _check_induced_c5(g, c)
    cmask = mask_of(c)
    pos = {v: i for i, v in enumerate(c)}
    s0 = s5 = 0
    s2 = [0] * 5
    s31 = [0] * 5
    s32 = [0] * 5
    s4 = [0] * 5
    for v in range(g.n):
        if cmask >> v & 1:
            continue
        trace = frozenset(pos[u] for u in bits(g.adj[v] & cmask))
        if not trace:
            s0 |= 1 << v
        elif len(trace) == 5:
            s5 |= 1 << v
        else:
            for i in range(5):
                if trace == {(i - 1) % 5, (i + 1) % 5}:
                    s2[i] |= 1 << v
                    break
                if trace == {(i - 1) % 5, i, (i + 1) % 5}:
                    s31[i] |= 1 << v
                    break
                if trace == {(i - 2) % 5, i, (i + 2) % 5}:
                    s32[i] |= 1 << v
                    break
                if trace == {(i + 1) % 5, (i + 2) % 5, (i + 3) % 5, (i + 4) % 5}:
                    s4[i] |= 1 << v
                    break
            else:
                raise ClassViolation(v, tuple(sorted(c[i] for i in trace)))
    return PartitionC5(tuple(c), s0, s5, tuple(s2), tuple(s31), tuple(s32), tuple(s4))


def _anticomplete(g: Graph, a: int, b: int) -> Optional[tuple[int, int]]:
    for v in bits(a):
        hit = g.adj[v] & b
        if hit:
            return (v, hit.bit_length() - 1)
    return None


def _complete(g: Graph, a: int, b: int) -> Optional[tuple[int, int]]:
    for v in bits(a):
        miss = b & ~g.adj[v] & ~(1 << v)
        if miss:
            return (v, miss.bit_length() - 1)
    return None


def _mixed_on_edge(g: Graph, probes: int, edgeset: int) -> Optional[tuple[int, int, int]]:
    """A (probe, u, u') with u~u' an edge inside ``edgeset`` and the probe
    adjacent to exactly one endpoint."""
    inner = [v for v in bits(edgeset)]
    for u in inner:
        for up in bits(g.adj[u] & edgeset):
            if up <= u:
                continue
            for w in bits(probes):
                if (g.adj[w] >> u & 1) != (g.adj[w] >> up & 1):
                    return (w, u, up)
    return None


def _component_clique_homogeneous(
    g: Graph, classmask: int
) -> Optional[tuple[int, ...]]:
    """Each component of the class must be homogeneous in g and P3-free
    (i.e. a clique). Returns a witness tuple or None."""
    if not classmask:
        return None
    sub = g.induced_subgraph(classmask)
    keep = list(bits(classmask))
    for comp in sub.components():
        verts = [keep[v] for v in bits(comp)]
        compmask = mask_of(verts)
        for a in verts:
            missing = compmask & ~g.adj[a] & ~(1 << a)
            if missing:
                return (a, missing.bit_length() - 1)  # P3 inside the component
        if compmask != g.full_mask:
            homog, w = is_homogeneous(g, compmask)
            if not homog:
                return (w,) + tuple(verts[:2])
    return None


def verify_c5_properties(g: Graph, p: PartitionC5) -> PropertyReport:
    """Check all eighteen structural statements around the hole."""
    checks: list[PropertyCheck] = []
    s2_all = p.union(p.s2)
    s31_all = p.union(p.s31)
    s32_all = p.union(p.s32)
    s4_all = p.union(p.s4)

    def add(prop: str, witness) -> None:
        checks.append(PropertyCheck(prop, witness is None, witness))

    add("1", _anticomplete(g, p.s0, s2_all | s31_all))

    w = None
    for i in range(5):
        w = _mixed_on_edge(g, p.s32[i], p.s0)
        if w:
            break
    add("2", w)

    add("3", _anticomplete(g, p.s0, s4_all | p.s5))
    add("4", _component_clique_homogeneous(g, p.s0))

    w = None
    for i in range(5):
        w = _mixed_on_edge(g, p.s31[i], p.s2[i])
        if w:
            break
    add("5", w)

    w = None
    for i in range(5):
        w = _complete(g, p.s2[i], p.s31[(i + 1) % 5] | p.s31[(i - 1) % 5])
        if w:
            break
    add("6", w)

    w = None
    for i in range(5):
        w = _anticomplete(g, p.s2[i], p.s31[(i + 2) % 5] | p.s31[(i - 2) % 5])
        if w:
            break
    add("7", w)

    w = None
    for i in range(5):
        w = _complete(g, p.s2[i], p.s32[i])
        if w:
            break
    add("8", w)

    w = None
    for i in range(5):
        w = _anticomplete(g, p.s2[i], s32_all & ~p.s32[i])
        if w:
            break
    add("9", w)

    w = None
    for i in range(5):
        w = _anticomplete(g, p.s2[i], p.s4[i])
        if w:
            break
    add("10", w)

    w = None
    for i in range(5):
        w = _complete(g, p.s2[i], s4_all & ~p.s4[i])
        if w:
            break
    add("11", w)

    w = None
    for i in range(5):
        w = _complete(g, p.s2[i], p.s2[(i + 1) % 5] | p.s2[(i - 1) % 5])
        if w:
            break
    add("12", w)

    w = None
    for i in range(5):
        for d in (2, 3):
            w = _mixed_on_edge(g, p.s2[(i + d) % 5], p.s2[i])
            if w:
                break
        if w:
            break
    add("13", w)

    if s2_all and p.s5:
        add("14", (s2_all.bit_length() - 1, p.s5.bit_length() - 1))
    else:
        add("14", None)

    w = None
    for i in range(5):
        w = _component_clique_homogeneous(g, p.s2[i])
        if w:
            break
    add("15", w)

    add("16", _complete(g, p.s5, s32_all))

    w = None
    for u, up in combinations(list(bits(p.s5)), 2):
        if g.has_edge(u, up):
            continue
        for v in bits(s31_all | s4_all):
            if not (g.adj[v] >> u & 1) and not (g.adj[v] >> up & 1):
                w = (u, up, v)
                break
        if w:
            break
    add("17", w)

    w = None
    for name, cls in (("s31", p.s31), ("s32", p.s32), ("s4", p.s4)):
        for i in range(5):
            for a in bits(cls[i]):
                missing = cls[i] & ~g.adj[a] & ~(1 << a)
                if missing:
                    w = (a, missing.bit_length() - 1)
                    break
            if w:
                break
        if w:
            break
    add("18", w)

    return PropertyReport(tuple(checks))


def _check_antihole_order(g: Graph, c: Sequence[int]) -> int:
    m = len(c)
    if m < 7 or m % 2 == 0 or len(set(c)) != m:
        raise GraphError("c must list an odd number (>= 7) of distinct vertices")
    for i in range(m):
        for j in range(i + 1, m):
            d = (j - i) % m
            want = d not in (1, m - 1)
            if g.has_edge(c[i], c[j]) != want:
                raise GraphError("c does not realize the antihole adjacency rule")
    return (m - 1) // 2


def partition_around_antihole(g: Graph, c: Sequence[int]) -> PartitionAntihole:
    """Classes S(X) of exact neighborhoods on the antihole, plus the
    per-size unions S_m."""
    _check_antihole_order(g, c)
    cmask = mask_of(c)
    pos = {v: i for i, v in enumerate(c)}
    classes: dict[frozenset[int], int] = {}
    by_size: dict[int, int] = {m: 0 for m in range(len(c) + 1)}
    for v in range(g.n):
        if cmask >> v & 1:
            continue
        x = frozenset(pos[u] for u in bits(g.adj[v] & cmask))
        classes[x] = classes.get(x, 0) | (1 << v)
        by_size[len(x)] |= 1 << v
    return PartitionAntihole(tuple(c), classes, by_size)


def verify_antihole_claims(
    g: Graph, p: PartitionAntihole, connected: bool = True
) -> PropertyReport:
    """The claims around an odd antihole: S_m empty for 1 <= m <= t, S_0
    empty (for connected graphs), every S(X) with t+1 <= |X| <= 2t a clique,
    and domination of the middle classes by nonadjacent pairs in S_{2t+1}."""
    t = p.t
    m_top = 2 * t + 1
    checks: list[PropertyCheck] = []

    for m in range(1, t + 1):
        mask = p.by_size.get(m, 0)
        witness = (mask.bit_length() - 1,) if mask else None
        checks.append(PropertyCheck(f"S{m}-empty", witness is None, witness))

    if connected:
        mask = p.by_size.get(0, 0)
        witness = (mask.bit_length() - 1,) if mask else None
        checks.append(PropertyCheck("S0-empty", witness is None, witness))

    w = None
    for x, mask in sorted(p.classes.items(), key=lambda kv: sorted(kv[0])):
        if not t + 1 <= len(x) <= 2 * t:
            continue
        for a in bits(mask):
            missing = mask & ~g.adj[a] & ~(1 << a)
            if missing:
                w = (a, missing.bit_length() - 1)
                break
        if w:
            break
    checks.append(PropertyCheck("SX-clique", w is None, w))

    middle = 0
    for m in range(t + 1, 2 * t + 1):
        middle |= p.by_size.get(m, 0)
    top = p.by_size.get(m_top, 0)
    w = None
    for u, up in combinations(list(bits(top)), 2):
        if g.has_edge(u, up):
            continue
        for v in bits(middle):
            if not (g.adj[v] >> u & 1) and not (g.adj[v] >> up & 1):
                w = (u, up, v)
                break
        if w:
            break
    checks.append(PropertyCheck("Stop-domination", w is None, w))

    return PropertyReport(tuple(checks))
