from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from critgraph import (
    Graph,
    antihole,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    complete,
    cycle,
    dart,
    path,
)
from tests.conftest import random_graph


def shuffled(g: Graph, rng) -> Graph:
    order = list(range(g.n))
    rng.shuffle(order)
    return g.relabel(order)


class TestExamples:
    def test_relabeled_c5_equal(self):
        a = cycle(5)
        b = a.relabel([0, 2, 4, 1, 3])
        assert canonical_form(a) == canonical_form(b)

    def test_p5_differs_from_c5(self):
        assert canonical_form(path(5)) != canonical_form(cycle(5))

    def test_c5_is_self_complementary(self):
        assert are_isomorphic(cycle(5), antihole(5))

    def test_p5_vs_p4_plus_k1(self):
        b = path(4).add_vertex(0)
        assert not are_isomorphic(path(5), b)

    def test_dart_relabelings(self, rng):
        for _ in range(20):
            assert are_isomorphic(dart(), shuffled(dart(), rng))

    def test_canonical_graph_is_isomorphic_representative(self):
        g = dart()
        h = canonical_graph(g)
        assert are_isomorphic(g, h)
        assert canonical_form(h) == canonical_form(g)

    def test_twins_heavy_graphs(self, rng):
        # cliques and complete multipartite graphs stress the twin classes
        g = complete(9)
        assert canonical_form(g) == canonical_form(shuffled(g, rng))
        tri = Graph(6, (0b111100, 0b111100, 0b110011, 0b110011, 0b001111, 0b001111))
        assert canonical_form(tri) == canonical_form(shuffled(tri, rng))


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bitsel in range(1 << len(pairs)):
        adj = [0] * n
        for idx, (u, v) in enumerate(pairs):
            if bitsel >> idx & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    from itertools import permutations

    if a.n != b.n:
        return False
    for perm in permutations(range(a.n)):
        if a.relabel(list(perm)).adj == b.adj:
            return True
    return False


def test_exact_on_all_small_graphs():
    """canonical_form equality coincides with isomorphism on every graph
    with at most 4 vertices (exhaustive 75-graph check)."""
    graphs = list(all_graphs(4))
    keys = [canonical_form(g) for g in graphs]
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert (keys[i] == keys[j]) == brute_isomorphic(graphs[i], graphs[j])


def test_class_count_n4():
    # 11 isomorphism classes of 4-vertex graphs is a classical count
    assert len({canonical_form(g) for g in all_graphs(4)}) == 11


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.randoms(use_true_random=False))
def test_invariance_under_relabeling(n, rnd):
    g = random_graph(rnd, n, rnd.random())
    assert canonical_form(g) == canonical_form(shuffled(g, rnd))
