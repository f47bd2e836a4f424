"""End-to-end acceptance suite.

Each test covers one headline requirement and prints a single PASS/FAIL
line (run with -s or check the captured output). The k=6 run is the long
pole; everything downstream of it shares one session-scoped result.
"""

import random
import time
from itertools import combinations

import pytest

from critgraph import GenConfig, Graph, generate_all
from critgraph.canon import canonical_form
from critgraph.certify import (
    CriticalDatabase,
    certify_k_colorability,
    verify_certificate,
)
from critgraph.coloring import chromatic_number, is_k_colorable
from critgraph.criticality import is_k_critical_family, is_k_vertex_critical
from critgraph.detect import (
    comparable_pair,
    find_induced,
    induced_antihole_orderings,
    induced_c5_orderings,
    is_family_free,
)
from critgraph.generate import default_family
from critgraph.graph6 import decode, encode
from critgraph.graphs import bits
from critgraph.structure import (
    partition_around_antihole,
    partition_around_c5,
    verify_antihole_claims,
    verify_c5_properties,
)

from conftest import (
    oracle_chromatic,
    oracle_find_induced,
    oracle_vertex_critical,
    random_graph,
)

K5_HISTOGRAM = {5: 1, 7: 1, 8: 6, 9: 172, 10: 1, 13: 3}
K6_HISTOGRAM = {6: 1, 8: 1, 9: 6, 10: 171, 11: 17834, 12: 2, 13: 1, 16: 13}
K5_CRITICAL_HISTOGRAM = {5: 1, 7: 1, 8: 1, 9: 7, 10: 1, 13: 3}
K6_CRITICAL_HISTOGRAM = {6: 1, 8: 1, 9: 1, 10: 6, 11: 33, 12: 2, 13: 1, 16: 13}
K7_PREFIX = {7: 1, 9: 1, 10: 6, 11: 171}


def report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {name}" + (f": {detail}" if detail else ""))
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def corpus_k6():
    return generate_all(GenConfig(k=6))


def histogram(graphs):
    out = {}
    for g in graphs:
        out[g.n] = out.get(g.n, 0) + 1
    return out


def test_01_k5_exhaustive(corpus_k5):
    t0 = time.monotonic()
    result = generate_all(GenConfig(k=5))
    elapsed = time.monotonic() - t0
    hist = histogram(result.graphs.values())
    ok = (
        result.total == 184
        and hist == K5_HISTOGRAM
        and not result.truncated
        and elapsed <= 300
    )
    report(
        "k=5 exhaustive run (184 graphs, exact histogram, <=5min)",
        ok,
        f"total={result.total} hist={hist} truncated={result.truncated} "
        f"time={elapsed:.1f}s",
    )


def test_02_k6_exhaustive(corpus_k6):
    t0 = time.monotonic()
    result = generate_all(GenConfig(k=6))
    elapsed = time.monotonic() - t0
    hist = histogram(result.graphs.values())
    ok = (
        result.total == 18029
        and hist == K6_HISTOGRAM
        and not result.truncated
        and elapsed <= 7200
    )
    report(
        "k=6 exhaustive run (18029 graphs, exact histogram, <=2h)",
        ok,
        f"total={result.total} truncated={result.truncated} time={elapsed:.1f}s",
    )


def test_03_filter_critical(corpus_k5, corpus_k6):
    family = default_family()
    kept5 = [
        g
        for g in corpus_k5.graphs.values()
        if is_k_critical_family(g, 5, family)[0]
    ]
    kept6 = [
        g
        for g in corpus_k6.graphs.values()
        if is_k_critical_family(g, 6, family)[0]
    ]
    h5, h6 = histogram(kept5), histogram(kept6)
    ok = (
        len(kept5) == 14
        and h5 == K5_CRITICAL_HISTOGRAM
        and len(kept6) == 58
        and h6 == K6_CRITICAL_HISTOGRAM
    )
    report(
        "critical filtering (14 at k=5, 58 at k=6, exact histograms)",
        ok,
        f"k5={len(kept5)} {h5} k6={len(kept6)} {h6}",
    )


def test_04_k7_capped_prefix():
    result = generate_all(GenConfig(k=7, max_order=12))
    hist = histogram(result.graphs.values())
    prefix = {n: c for n, c in hist.items() if n <= 11}
    all_verified = all(
        is_k_vertex_critical(g, 7)[0] for g in result.graphs.values()
    )
    ok = prefix == K7_PREFIX and all_verified
    report(
        "k=7 depth-capped run (n<=11 prefix exact, all outputs verified)",
        ok,
        f"prefix={prefix} all_verified={all_verified}",
    )


def test_05_self_consistency(corpus_k5, corpus_k6):
    family = default_family()
    bad = []
    for k, corpus in ((5, corpus_k5), (6, corpus_k6)):
        for key, g in corpus.graphs.items():
            if not is_k_vertex_critical(g, k)[0]:
                bad.append((k, key, "not-vertex-critical"))
            elif not is_family_free(g, family):
                bad.append((k, key, "not-family-free"))
            elif min(bin(m).count("1") for m in g.adj) < k - 1:
                bad.append((k, key, "low-degree"))
            elif comparable_pair(g) is not None:
                bad.append((k, key, "comparable-pair"))
    report(
        "self-consistency of every emitted graph (k=5,6)",
        not bad,
        f"violations={bad[:3]}" if bad else "0 exceptions",
    )


def test_06_structural_suite(corpus_k5, corpus_k6, rng):
    failures = []
    holes5 = 0
    for g in corpus_k5.graphs.values():
        for order in induced_c5_orderings(g):
            holes5 += 1
            rep = verify_c5_properties(g, partition_around_c5(g, order))
            if not rep.all_hold:
                failures.append(("k5-c5", order, rep.violations()))
    sampler = random.Random(rng.random())
    holes6 = 0
    for g in sampler.sample(list(corpus_k6.graphs.values()), len(corpus_k6.graphs)):
        for order in induced_c5_orderings(g):
            holes6 += 1
            rep = verify_c5_properties(g, partition_around_c5(g, order))
            if not rep.all_hold:
                failures.append(("k6-c5", order, rep.violations()))
            if holes6 >= 1000:
                break
        if holes6 >= 1000:
            break
    anticount = 0
    for k, corpus in ((5, corpus_k5), (6, corpus_k6)):
        graphs = list(corpus.graphs.values())
        if k == 6:
            graphs = sampler.sample(graphs, 300)
        for g in graphs:
            for m in (7, 9):
                for order in induced_antihole_orderings(g, m):
                    anticount += 1
                    rep = verify_antihole_claims(
                        g,
                        partition_around_antihole(g, order),
                        connected=g.is_connected(),
                    )
                    if not rep.all_hold:
                        failures.append((f"k{k}-antihole{m}", order, rep.violations()))
                    break  # claims are per-antihole; one ordering suffices
    report(
        "structural suite (18 hole properties + antihole claims)",
        not failures and holes5 > 0 and holes6 >= 1000 and anticount > 0,
        f"k5-holes={holes5} k6-holes={holes6} antiholes={anticount} "
        f"failures={len(failures)}",
    )


def test_07_oracle_equivalence(corpus_k5, rng):
    sampler = random.Random(rng.random())
    checked = 0
    mismatches = []

    def check(g):
        nonlocal checked
        checked += 1
        if chromatic_number(g) != oracle_chromatic(g):
            mismatches.append(("chi", g.adj))
        pattern = random_graph(sampler, sampler.randint(1, min(4, max(g.n, 1))))
        mine = find_induced(g, pattern)
        theirs = oracle_find_induced(g, pattern)
        if (mine is None) != (theirs is None):
            mismatches.append(("find_induced", g.adj, pattern.adj))
        k = sampler.randint(1, 5)
        if is_k_vertex_critical(g, k)[0] != oracle_vertex_critical(g, k):
            mismatches.append(("critical", g.adj, k))

    for _ in range(10000):
        check(random_graph(sampler, sampler.randint(0, 7), sampler.random()))
    subgraph_count = 0
    for g in corpus_k5.graphs.values():
        for size in range(1, 8):
            if size > g.n:
                break
            verts = sampler.sample(range(g.n), size)
            mask = 0
            for v in verts:
                mask |= 1 << v
            check(g.induced_subgraph(mask))
            subgraph_count += 1
    report(
        "oracle equivalence (chromatic/find_induced/criticality, n<=7)",
        not mismatches,
        f"instances={checked} (corpus subgraphs={subgraph_count}) "
        f"mismatches={len(mismatches)}",
    )


def test_08_certify_round_trip(corpus_k5, rng):
    sampler = random.Random(rng.random())
    db = CriticalDatabase(5, list(corpus_k5.graphs.values()))
    graphs = list(corpus_k5.graphs.values())
    t0 = time.monotonic()
    bad = 0
    for _ in range(200):
        host = sampler.choice(graphs)
        size = sampler.randint(1, host.n)
        mask = 0
        for v in sampler.sample(range(host.n), size):
            mask |= 1 << v
        g = host.induced_subgraph(mask)
        decision, cert = certify_k_colorability(g, 4, db)
        if not verify_certificate(g, 4, cert, db):
            bad += 1
        elif decision != (is_k_colorable(g, 4) is not None):
            bad += 1
    elapsed = time.monotonic() - t0
    report(
        "certify round-trip (200 samples, verified certificates, <=5min)",
        bad == 0 and elapsed <= 300,
        f"bad={bad} time={elapsed:.1f}s",
    )


def test_09_codec_and_canon(corpus_k5, corpus_k6, rng):
    sampler = random.Random(rng.random())
    codec_bad = sum(
        1
        for corpus in (corpus_k5, corpus_k6)
        for g in corpus.graphs.values()
        if decode(encode(g)) != g
    )
    canon_bad = 0
    pool = list(corpus_k5.graphs.values()) + list(corpus_k6.graphs.values())
    for g in sampler.sample(pool, 50):
        key = canonical_form(g)
        for _ in range(100):
            perm = list(range(g.n))
            sampler.shuffle(perm)
            adj = [0] * g.n
            for u in range(g.n):
                for v in bits(g.adj[u]):
                    adj[perm[u]] |= 1 << perm[v]
            if canonical_form(Graph(g.n, tuple(adj))) != key:
                canon_bad += 1
    report(
        "graph6 round-trip over corpora + canonical relabeling invariance",
        codec_bad == 0 and canon_bad == 0,
        f"codec_mismatches={codec_bad} canon_mismatches={canon_bad}",
    )


def test_10_k4_bound(corpus_k4):
    max_order = max((g.n for g in corpus_k4.graphs.values()), default=0)
    ok = not corpus_k4.truncated and max_order <= 13
    report(
        "k=4 run terminates with every output on <=13 vertices",
        ok,
        f"count={corpus_k4.total} max_order={max_order} "
        f"truncated={corpus_k4.truncated}",
    )
