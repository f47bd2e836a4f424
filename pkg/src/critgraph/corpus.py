"""Corpus files: one graph6 line per graph sorted by canonical key, plus a
key=value manifest recording the run parameters and per-order counts."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .generate import GenConfig, GenResult
from .graph6 import decode
from .graphs import Graph


class ManifestError(ValueError):
    """Malformed or inconsistent manifest."""


@dataclass(frozen=True)
class Manifest:
    k: int
    family: str
    total: int
    truncated: bool
    counts_by_order: dict[int, int]
    stats: dict[str, int]
    graphs_file: str


def family_label(cfg: GenConfig) -> str:
    # default family is P5 then dart; custom families get generic names
    names = []
    for h in cfg.family:
        from .canon import are_isomorphic
        from .graphs import dart, path

        if are_isomorphic(h, path(5)):
            names.append("P5")
        elif are_isomorphic(h, dart()):
            names.append("dart")
        else:
            names.append(f"order{h.n}edges{h.edge_count()}")
    return ",".join(names)


def write_corpus(result: GenResult, cfg: GenConfig, out_path: str) -> str:
    """Write <out_path> (graph6 lines) and <out_path>.manifest; returns the
    manifest path."""
    keys = result.sorted_keys()
    with open(out_path, "wb") as fh:
        for key in keys:
            fh.write(key + b"\n")
    manifest_path = out_path + ".manifest"
    with open(manifest_path, "w") as fh:
        fh.write(manifest_text(result, cfg, os.path.basename(out_path)))
    return manifest_path


def manifest_text(result: GenResult, cfg: GenConfig, graphs_file: str) -> str:
    lines = [
        f"k={cfg.k}",
        f"family={family_label(cfg)}",
        f"total={result.total}",
        f"truncated={'true' if result.truncated else 'false'}",
        f"graphs={graphs_file}",
        f"nodes={result.stats.get('nodes', 0)}",
        f"cache_hits={result.stats.get('cache_hits', 0)}",
    ]
    for order in sorted(result.counts_by_order):
        lines.append(f"order_{order}={result.counts_by_order[order]}")
    return "\n".join(lines) + "\n"


def read_manifest(path: str) -> Manifest:
    fields: dict[str, str] = {}
    counts: dict[int, int] = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ManifestError(f"bad manifest line: {line!r}")
            key, value = line.split("=", 1)
            if key.startswith("order_"):
                counts[int(key[6:])] = int(value)
            else:
                fields[key] = value
    try:
        return Manifest(
            k=int(fields["k"]),
            family=fields.get("family", ""),
            total=int(fields["total"]),
            truncated=fields["truncated"] == "true",
            counts_by_order=counts,
            stats={
                "nodes": int(fields.get("nodes", 0)),
                "cache_hits": int(fields.get("cache_hits", 0)),
            },
            graphs_file=fields.get("graphs", ""),
        )
    except KeyError as exc:
        raise ManifestError(f"manifest missing field {exc}") from exc


def read_corpus(manifest_path: str) -> tuple[Manifest, list[Graph]]:
    """Load a manifest and the graph6 corpus it points to (resolved
    relative to the manifest's directory)."""
    manifest = read_manifest(manifest_path)
    graphs_path = os.path.join(
        os.path.dirname(os.path.abspath(manifest_path)), manifest.graphs_file
    )
    graphs = []
    with open(graphs_path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(decode(line))
    if len(graphs) != manifest.total:
        raise ManifestError(
            f"manifest says {manifest.total} graphs, corpus has {len(graphs)}"
        )
    return manifest, graphs
