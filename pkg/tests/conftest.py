"""Shared fixtures: a small graph zoo, brute-force oracles, and
session-scoped generated corpora used across test modules."""

import random
from itertools import combinations, permutations, product

import pytest

from critgraph import GenConfig, Graph, generate_all
from critgraph.graphs import bits


# -- oracles (independent of the package's algorithms) ----------------------


def oracle_chromatic(g: Graph) -> int:
    """Exhaustive labeling search, no pruning beyond early abort."""
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for labeling in product(range(k), repeat=g.n):
            ok = True
            for u in range(g.n):
                for v in bits(g.adj[u]):
                    if v > u and labeling[u] == labeling[v]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return k
    raise AssertionError("unreachable")


def oracle_find_induced(host: Graph, pattern: Graph):
    """All injective maps, checked edge by edge."""
    if pattern.n > host.n:
        return None
    for combo in permutations(range(host.n), pattern.n):
        ok = True
        for i in range(pattern.n):
            for j in range(i + 1, pattern.n):
                want = pattern.adj[i] >> j & 1
                have = host.adj[combo[i]] >> combo[j] & 1
                if want != have:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return combo
    return None


def oracle_vertex_critical(g: Graph, k: int) -> bool:
    if oracle_chromatic(g) != k:
        return False
    full = (1 << g.n) - 1
    for v in range(g.n):
        if oracle_chromatic(g.induced_subgraph(full ^ (1 << v))) >= k:
            return False
    return True


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    adj = [0] * n
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@pytest.fixture(scope="session")
def rng():
    return random.Random(0xC5)


# -- generated corpora (shared; the k=5 run takes a few seconds) -------------


@pytest.fixture(scope="session")
def corpus_k4():
    return generate_all(GenConfig(k=4))


@pytest.fixture(scope="session")
def corpus_k5():
    return generate_all(GenConfig(k=5))
