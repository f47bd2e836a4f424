"""Exhaustive generation of k-vertex-critical family-free graphs.

The search extends a seed graph one vertex at a time, trying every neighbor
set the pruning rules permit, with canonical-form deduplication of every
graph entered. Mandatory rules:

  R1  an extension may not create a forbidden induced pattern through the
      new vertex (the rest of the graph was already family-free);
  R2  a graph that is not (k-1)-colorable is never extended: it cannot be a
      proper induced subgraph of a k-vertex-critical graph, so it is either
      emitted (when k-vertex-critical) or dropped.

Optional accelerators (on by default, each leaves the emitted set
unchanged; see the docstrings of the helpers for the soundness arguments):
nonempty neighbor sets, comparable-pair destruction and deficient-vertex
attachment.

R1 is evaluated in bulk: an extension by neighbor set s creates a pattern of
order p through the new vertex u iff some (p-1)-subset W of the existing
vertices has s & W equal to one of a precomputed table of bad traces, so the
candidate space is filtered with a few hundred vectorized mask comparisons
instead of per-subset pattern searches, and each node inherits the filtered
candidate array of its parent (constraints whose W avoids the new vertex are
unchanged).
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .canon import canonical_form
from .coloring import is_k_colorable
from .criticality import is_k_vertex_critical, scan_xy_obstruction
from .detect import comparable_pair, is_family_free, new_vertex_keeps_family_free
from .graph6 import decode
from .graphs import Graph, GraphError, antihole, bits, complete, cycle, dart, mask_of, path

_VECTOR_LIMIT = 24  # 2**n candidate masks must stay addressable

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


def _popcount(arr: np.ndarray) -> np.ndarray:
    out = _POP16[(arr & 0xFFFF).astype(np.intp)].astype(np.int64)
    out += _POP16[((arr >> 16) & 0xFFFF).astype(np.intp)]
    out += _POP16[((arr >> 32) & 0xFFFF).astype(np.intp)]
    out += _POP16[((arr >> 48) & 0xFFFF).astype(np.intp)]
    return out


class ConfigError(ValueError):
    """Invalid generation configuration."""


def default_family() -> tuple[Graph, ...]:
    return (path(5), dart())


def default_seeds(k: int) -> list[Graph]:
    """C5 plus the odd antiholes C_{2t+1}-bar for 3 <= t <= k-2."""
    if k < 4:
        raise ConfigError("auto seeds need k >= 4")
    return [cycle(5)] + [antihole(2 * t + 1) for t in range(3, k - 1)]


@dataclass(frozen=True)
class GenConfig:
    k: int
    family: tuple[Graph, ...] = field(default_factory=default_family)
    max_order: int = 64
    seeds: Optional[tuple[Graph, ...]] = None
    lookahead: bool = True
    require_attachment: bool = True
    jobs: int = 1
    cache_budget: Optional[int] = None

    def __post_init__(self):
        if self.k < 1:
            raise ConfigError("k must be positive")
        if not 1 <= self.max_order <= 64:
            raise ConfigError("max_order must be in 1..64")
        for h in self.family:
            if h.n < 2:
                raise ConfigError("forbidden patterns must have >= 2 vertices")
        if self.seeds is not None:
            for s in self.seeds:
                if not is_family_free(s, self.family):
                    raise ConfigError("seed is not family-free")
        budget = self.cache_budget
        if budget is None:
            env = os.environ.get("GRAPHGEN_CACHE_BUDGET")
            if env:
                object.__setattr__(self, "cache_budget", int(env))


@dataclass
class GenResult:
    graphs: dict[bytes, Graph]
    counts_by_order: dict[int, int]
    truncated: bool
    stats: dict[str, int]

    @property
    def total(self) -> int:
        return len(self.graphs)

    def sorted_keys(self) -> list[bytes]:
        return sorted(self.graphs)


# -- R1 trace tables --------------------------------------------------------


def _trace_tables(family: Sequence[Graph]) -> dict[int, list[tuple[int, ...]]]:
    """For each pattern order p in the family, a table indexed by the
    internal adjacency code of a (p-1)-subset W listing the new-vertex
    traces t (bitmasks over W positions) for which W plus a new vertex with
    neighborhood t within W induces a family member."""
    by_order: dict[int, set[bytes]] = {}
    for h in family:
        by_order.setdefault(h.n, set()).add(canonical_form(h))
    tables: dict[int, list[tuple[int, ...]]] = {}
    for p, keys in by_order.items():
        q = p - 1
        npairs = q * (q - 1) // 2
        table: list[tuple[int, ...]] = []
        for code in range(1 << npairs):
            adj = [0] * (q + 1)
            bit = 0
            for col in range(1, q):
                for row in range(col):
                    if code >> bit & 1:
                        adj[row] |= 1 << col
                        adj[col] |= 1 << row
                    bit += 1
            bad = []
            for trace in range(1 << q):
                cand_adj = list(adj)
                cand_adj[q] = trace
                for w in bits(trace):
                    cand_adj[w] |= 1 << q
                if canonical_form(Graph(q + 1, cand_adj)) in keys:
                    bad.append(trace)
            table.append(tuple(bad))
        tables[q] = table
    return tables


def _subset_code(adj: Sequence[int], w: Sequence[int]) -> int:
    """Internal adjacency code of the sorted subset w (graph6 pair order)."""
    code = 0
    bit = 0
    for col in range(1, len(w)):
        row_adj = adj[w[col]]
        for row in range(col):
            code |= (row_adj >> w[row] & 1) << bit
            bit += 1
    return code


def _constraints_for_subsets(g: Graph, tables, subsets_by_q) -> list[tuple[int, int]]:
    out = []
    for q, table in tables.items():
        for w in subsets_by_q(q):
            bad = table[_subset_code(g.adj, w)]
            if bad:
                wmask = mask_of(w)
                for t in bad:
                    out.append((wmask, mask_of(w[j] for j in bits(t))))
    return out


def _all_constraints(g: Graph, tables) -> list[tuple[int, int]]:
    return _constraints_for_subsets(
        g, tables, lambda q: combinations(range(g.n), q)
    )


def _new_vertex_constraints(g: Graph, tables) -> list[tuple[int, int]]:
    """Constraints whose subset W contains the most recently added vertex."""
    a = g.n - 1
    return _constraints_for_subsets(
        g, tables, lambda q: (b + (a,) for b in combinations(range(a), q - 1))
    )


def _apply_constraints(cand: np.ndarray, constraints) -> np.ndarray:
    for wmask, tmask in constraints:
        cand = cand[(cand & wmask) != tmask]
    return cand


# -- optional rules ---------------------------------------------------------


def _obstruction_candidates(g: Graph, size_cap: int):
    """Candidate sets for the obstruction-pair scan: all subsets of one or
    two vertices, plus cliques of 3..size_cap vertices. Each entry is
    (mask, chromatic number, neighborhood-outside mask); order is by size,
    then lexicographic, so the scan is deterministic."""
    subs: list[tuple[int, int, int]] = []
    for v in range(g.n):
        subs.append((1 << v, 1, g.adj[v]))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            m = (1 << u) | (1 << v)
            chi = 2 if g.adj[u] >> v & 1 else 1
            subs.append((m, chi, (g.adj[u] | g.adj[v]) & ~m))
    level = [
        ((1 << u) | (1 << v), (g.adj[u] | g.adj[v]) & ~((1 << u) | (1 << v)))
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if g.adj[u] >> v & 1
    ]
    size = 2
    while size < size_cap and level:
        grown = []
        for m, nb in level:
            top = m.bit_length()  # grow with larger indices only: no dupes
            for v in range(top, g.n):
                if (g.adj[v] & m) == m:
                    m2 = m | (1 << v)
                    grown.append((m2, (nb | g.adj[v]) & ~m2))
        size += 1
        subs.extend((m, size, nb) for m, nb in grown)
        level = grown
    return subs


def _scan_obstruction(g: Graph, size_cap: int) -> Optional[tuple[int, int]]:
    """First obstruction pair (per check_xy_obstruction) among the candidate
    sets of _obstruction_candidates, or None. Restricting sets of three or
    more vertices to cliques keeps the scan polynomial; any pair it reports
    is a genuine obstruction, so the lookahead built on it stays sound."""
    subs = _obstruction_candidates(g, size_cap)
    if not subs:
        return None
    masks = np.array([s[0] for s in subs], dtype=np.uint64)
    chis = np.array([s[1] for s in subs], dtype=np.int64)
    for xmask, xchi, xnb in subs:
        blocked = np.uint64(xmask | xnb)
        hits = np.nonzero(((masks & blocked) == 0) & (chis >= xchi))[0]
        for j in hits:
            ymask = subs[j][0]
            complete = True
            for v in bits(ymask):
                if xnb & ~(g.adj[v] | (1 << v)):
                    complete = False
                    break
            if complete:
                return (xmask, ymask)
    return None


def forced_adjacency(g: Graph, k: int) -> tuple[int, int]:
    """Lookahead constraint on the next vertex's neighbor set s: it must
    intersect the first mask (when nonzero) and must not cover the second
    mask entirely (when nonzero).

    Comparable-pair rule: if g has nonadjacent u, v with N(u) contained in
    N(v), any k-vertex-critical target G containing g has no comparable
    vertices, so G holds a vertex adjacent to u but not v, and that vertex
    lies outside g; since vertices may be added in any order, it can be
    added next. Restricting to such extensions keeps every target reachable.

    Obstruction-pair rule (the general form; a comparable pair is the size-1
    case): no k-vertex-critical graph holds disjoint nonempty anticomplete
    sets x, y with chi(g[x]) <= chi(g[y]) and y complete to N(x)
    (check_xy_obstruction). Later vertex additions never change edges inside
    the current vertex set, so x, y stay anticomplete with the same induced
    subgraphs; the only way a target destroys the obstruction is through a
    new vertex with a neighbor in x that misses part of y. Some such vertex
    exists in every target and may be added next.

    Deficient-vertex rule: every vertex of a k-vertex-critical graph has
    degree >= k-1, so a vertex of smaller degree in g still needs a neighbor
    outside g, which likewise may be added next.

    One rule is active at a time (a single next vertex cannot be forced to
    satisfy two independent demands); scan order is comparable pair, then
    obstruction pairs by ascending size, then minimum degree, with
    first-in-scan-order choices for determinism. The obstruction scan caps
    sets at k-2 vertices and restricts larger sets to cliques: enough to
    cover same-size clique piles hanging off a shared attachment set, which
    are the growth mode that otherwise keeps the search alive forever.
    """
    pair = comparable_pair(g)
    if pair is not None:
        u, v = pair
        return (1 << u, 1 << v)
    xy = _scan_obstruction(g, size_cap=max(1, k - 2))
    if xy is not None:
        return xy
    deg, vertex = min((g.degree(v), v) for v in range(g.n))
    if deg < k - 1:
        return (1 << vertex, 0)
    return (0, 0)


def pruning_permits(i: Graph, s: int, cfg: GenConfig) -> bool:
    """Reference per-subset form of the pruning rules: True iff extending
    ``i`` by a vertex with neighbor set ``s`` is kept. R1 always applies;
    the optional rules follow the config flags. (R2 acts at recursion entry,
    not here.)"""
    if cfg.require_attachment and i.n > 0 and s == 0:
        # Sound for k >= 2: vertex-critical graphs are connected, and the
        # vertices of a connected target can be added in an order (BFS from
        # the seed) where every new vertex has a neighbor among the old.
        return False
    if cfg.lookahead:
        need_hit, need_miss = forced_adjacency(i, cfg.k)
        if need_hit and not s & need_hit:
            return False
        if need_miss and s & need_miss == need_miss:
            return False
    return new_vertex_keeps_family_free(i.add_vertex(s), cfg.family)


def candidate_neighbor_sets(g: Graph, cfg: GenConfig, tables=None) -> list[int]:
    """All permitted neighbor sets for the next vertex, ascending by
    popcount then value. Reference path (non-incremental)."""
    if g.n > _VECTOR_LIMIT:
        raise GraphError(f"candidate enumeration capped at {_VECTOR_LIMIT} vertices")
    if tables is None:
        tables = _trace_tables(cfg.family)
    cand = np.arange(1 << g.n, dtype=np.uint64)
    cand = _apply_constraints(cand, _all_constraints(g, tables))
    return _order_candidates(_apply_rules(cand, g, cfg))


def _apply_rules(cand: np.ndarray, g: Graph, cfg: GenConfig) -> np.ndarray:
    if cfg.require_attachment and g.n > 0:
        cand = cand[cand != 0]
    if cfg.lookahead:
        need_hit, need_miss = forced_adjacency(g, cfg.k)
        if need_hit:
            cand = cand[(cand & np.uint64(need_hit)) != 0]
        if need_miss:
            cand = cand[(cand & np.uint64(need_miss)) != np.uint64(need_miss)]
    return cand


def _order_candidates(cand: np.ndarray) -> list[int]:
    pc = _popcount(cand)
    return [int(v) for v in cand[np.lexsort((cand, pc))]]


# -- the search -------------------------------------------------------------


class _Engine:
    def __init__(self, cfg: GenConfig, sink=None, cache=None):
        self.cfg = cfg
        self.tables = _trace_tables(cfg.family)
        self.sink: dict[bytes, Graph] = sink if sink is not None else {}
        self.visited: set[bytes] = cache if cache is not None else set()
        self.lock = threading.Lock()
        self.nodes = 0
        self.cache_hits = 0
        self.truncated = False
        self.cache_bytes = 0

    def _register(self, key: bytes) -> bool:
        """Insert-if-absent on the visited cache. False means: already seen,
        or the memory budget is exhausted (which flips the run to truncated
        semantics)."""
        with self.lock:
            if key in self.visited:
                self.cache_hits += 1
                return False
            budget = self.cfg.cache_budget
            if budget is not None and self.cache_bytes >= budget:
                self.truncated = True
                return False
            self.visited.add(key)
            self.cache_bytes += len(key) + 64
            return True

    def run_seed(self, seed: Graph) -> None:
        if not is_family_free(seed, self.cfg.family):
            raise ConfigError("seed is not family-free")
        key = canonical_form(seed)
        if not self._register(key):
            return
        cand = np.arange(1 << seed.n, dtype=np.uint64)
        cand = _apply_constraints(cand, _all_constraints(seed, self.tables))
        self._process(seed, key, cand)

    def _process(self, g: Graph, key: bytes, passset: np.ndarray) -> None:
        """Visit a freshly registered graph. ``passset`` holds every
        neighbor-set mask over V(g) satisfying the R1 constraints."""
        cfg = self.cfg
        with self.lock:
            self.nodes += 1
        if is_k_colorable(g, cfg.k - 1) is None:
            if is_k_vertex_critical(g, cfg.k)[0]:
                with self.lock:
                    self.sink[key] = decode(key)
            return
        if g.n >= cfg.max_order:
            self.truncated = True
            return
        if g.n >= _VECTOR_LIMIT:
            raise GraphError(
                f"search width beyond {_VECTOR_LIMIT} vertices is unsupported; "
                "set max_order accordingly"
            )
        for s in _order_candidates(_apply_rules(passset, g, cfg)):
            child = g.add_vertex(s)
            ckey = canonical_form(child)
            if not self._register(ckey):
                continue
            base = np.concatenate([passset, passset | np.uint64(1 << g.n)])
            child_pass = _apply_constraints(
                base, _new_vertex_constraints(child, self.tables)
            )
            self._process(child, ckey, child_pass)


def extend(cfg: GenConfig, i: Graph, sink=None, cache=None) -> dict[str, int]:
    """Run the extension search from graph ``i``, emitting every
    k-vertex-critical family-free graph containing it (up to isomorphism,
    subject to max_order) into ``sink``. Returns the search stats."""
    engine = _Engine(cfg, sink=sink, cache=cache)
    engine.run_seed(i)
    return {
        "nodes": engine.nodes,
        "cache_hits": engine.cache_hits,
        "truncated": int(engine.truncated),
    }


def generate_all(cfg: GenConfig) -> GenResult:
    """Seeded exhaustive run: extend from C5 and the odd antiholes, then
    inject K_k and the (2k-1)-antihole directly (each first verified
    k-vertex-critical and family-free)."""
    if cfg.seeds is not None:
        seeds = list(cfg.seeds)
    else:
        seeds = default_seeds(cfg.k)
    engine = _Engine(cfg)
    if cfg.jobs > 1 and len(seeds) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            list(pool.map(engine.run_seed, seeds))
    else:
        for seed in seeds:
            engine.run_seed(seed)

    for extra in (complete(cfg.k), antihole(2 * cfg.k - 1)):
        if extra.n > cfg.max_order:
            continue
        if not is_family_free(extra, cfg.family):
            raise ConfigError("direct-injection graph is not family-free")
        if not is_k_vertex_critical(extra, cfg.k)[0]:
            raise ConfigError("direct-injection graph is not k-vertex-critical")
        key = canonical_form(extra)
        engine.sink.setdefault(key, decode(key))

    counts: dict[int, int] = {}
    for graph in engine.sink.values():
        counts[graph.n] = counts.get(graph.n, 0) + 1
    return GenResult(
        graphs=dict(engine.sink),
        counts_by_order=dict(sorted(counts.items())),
        truncated=engine.truncated,
        stats={"nodes": engine.nodes, "cache_hits": engine.cache_hits},
    )
