import pytest

from critgraph.canon import canonical_form
from critgraph.corpus import (
    Manifest,
    ManifestError,
    family_label,
    read_corpus,
    read_manifest,
    write_corpus,
)
from critgraph.generate import GenConfig
from critgraph.graphs import complete, cycle


@pytest.fixture(scope="module")
def written(tmp_path_factory, corpus_k4):
    cfg = GenConfig(k=4)
    out = tmp_path_factory.mktemp("corpus") / "k4.g6"
    manifest_path = write_corpus(corpus_k4, cfg, str(out))
    return corpus_k4, cfg, str(out), manifest_path


class TestRoundTrip:
    def test_manifest_fields(self, written):
        result, cfg, _, manifest_path = written
        m = read_manifest(manifest_path)
        assert m.k == 4
        assert m.family == "P5,dart"
        assert m.total == result.total
        assert m.truncated is result.truncated
        assert m.counts_by_order == result.counts_by_order
        assert m.stats["nodes"] == result.stats["nodes"]

    def test_graphs_round_trip(self, written):
        result, _, out, manifest_path = written
        manifest, graphs = read_corpus(manifest_path)
        assert len(graphs) == manifest.total == result.total
        assert [canonical_form(g) for g in graphs] == list(result.sorted_keys())

    def test_sorted_by_canonical_key(self, written):
        _, _, out, _ = written
        with open(out, "rb") as fh:
            lines = [line.strip() for line in fh if line.strip()]
        assert lines == sorted(lines)

    def test_counts_cross_check(self, written):
        _, _, _, manifest_path = written
        manifest, graphs = read_corpus(manifest_path)
        by_order: dict[int, int] = {}
        for g in graphs:
            by_order[g.n] = by_order.get(g.n, 0) + 1
        assert by_order == manifest.counts_by_order
        assert sum(by_order.values()) == manifest.total


class TestManifestErrors:
    def test_bad_line(self, tmp_path):
        p = tmp_path / "m"
        p.write_text("k=4\nnonsense line\n")
        with pytest.raises(ManifestError, match="bad manifest line"):
            read_manifest(str(p))

    def test_missing_field(self, tmp_path):
        p = tmp_path / "m"
        p.write_text("k=4\ntotal=3\n")
        with pytest.raises(ManifestError, match="missing field"):
            read_manifest(str(p))

    def test_total_mismatch(self, tmp_path, written):
        result, cfg, out, _ = written
        p = tmp_path / "m"
        with open(out, "rb") as fh:
            body = fh.read()
        (tmp_path / "graphs.g6").write_bytes(body + b"@\n")
        p.write_text(
            f"k=4\ntotal={result.total}\ntruncated=false\ngraphs=graphs.g6\n"
        )
        with pytest.raises(ManifestError, match="corpus has"):
            read_corpus(str(p))

    def test_comments_and_blanks_ignored(self, tmp_path):
        p = tmp_path / "m"
        p.write_text("# run parameters\n\nk=5\ntotal=0\ntruncated=false\n")
        m = read_manifest(str(p))
        assert isinstance(m, Manifest) and m.k == 5 and m.total == 0


class TestFamilyLabel:
    def test_default(self):
        assert family_label(GenConfig(k=4)) == "P5,dart"

    def test_custom(self):
        cfg = GenConfig(k=4, family=(cycle(4), complete(3)))
        assert family_label(cfg) == "order4edges4,order3edges3"
