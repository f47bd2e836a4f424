"""Certifying k-colorability for (P5,dart)-free graphs.

The decision is made by the exact solver; the certificate carries the
guarantee: a proper k-coloring in the YES case, or an induced embedding of
some (k+1)-vertex-critical graph from a complete generated database in the
NO case. Both are independently re-checkable in time polynomial in the
input for a fixed database.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .canon import canonical_form
from .coloring import is_k_colorable, verify_coloring
from .criticality import is_k_vertex_critical
from .detect import find_induced, is_family_free
from .generate import default_family
from .graphs import Graph, GraphError


class DatabaseError(ValueError):
    """Unusable critical-graph database."""


@dataclass(frozen=True)
class Certificate:
    coloring: Optional[list[int]] = None
    embedding: Optional[tuple[int, ...]] = None
    db_key: Optional[bytes] = None

    @property
    def is_coloring(self) -> bool:
        return self.coloring is not None

    def serialize(self) -> str:
        if self.coloring is not None:
            return "YES " + ",".join(map(str, self.coloring))
        return (
            "NO "
            + self.db_key.decode("ascii")
            + " "
            + ",".join(map(str, self.embedding))
        )

    @staticmethod
    def parse(text: str) -> "Certificate":
        parts = text.strip().split()
        if parts and parts[0] == "YES":
            colors = [int(x) for x in parts[1].split(",")] if len(parts) > 1 else []
            return Certificate(coloring=colors)
        if len(parts) == 3 and parts[0] == "NO":
            return Certificate(
                embedding=tuple(int(x) for x in parts[2].split(",")),
                db_key=parts[1].encode("ascii"),
            )
        raise GraphError(f"bad certificate: {text!r}")


class CriticalDatabase:
    """The complete set of (k+1)-vertex-critical family-free graphs, keyed
    by canonical form and scanned smallest-first."""

    def __init__(
        self,
        k_plus_1: int,
        graphs: Sequence[Graph],
        truncated: bool = False,
        verify: bool = False,
    ):
        self.k_plus_1 = k_plus_1
        self.truncated = truncated
        entries = {}
        for g in graphs:
            entries[canonical_form(g)] = g
        if verify:
            family = default_family()
            for g in entries.values():
                if not is_family_free(g, family):
                    raise DatabaseError("database graph is not family-free")
                if not is_k_vertex_critical(g, k_plus_1)[0]:
                    raise DatabaseError(
                        f"database graph is not {k_plus_1}-vertex-critical"
                    )
        # smallest witness first, canonical key breaks ties deterministically
        self.entries: list[tuple[bytes, Graph]] = sorted(
            entries.items(), key=lambda kv: (kv[1].n, kv[0])
        )
        self._by_key = dict(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, key: bytes) -> Optional[Graph]:
        return self._by_key.get(key)

    @staticmethod
    def load(manifest_path: str, verify: bool = False) -> "CriticalDatabase":
        from .corpus import read_corpus

        manifest, graphs = read_corpus(manifest_path)
        return CriticalDatabase(
            manifest.k, graphs, truncated=manifest.truncated, verify=verify
        )


def certify_k_colorability(
    g: Graph, k: int, db: CriticalDatabase
) -> tuple[bool, Certificate]:
    """Decide k-colorability of a (P5,dart)-free graph with a checkable
    certificate either way."""
    if not is_family_free(g, default_family()):
        raise GraphError("input graph is not (P5,dart)-free")
    if db.k_plus_1 != k + 1:
        raise DatabaseError(f"database is for k={db.k_plus_1 - 1}, not k={k}")
    if db.truncated:
        raise DatabaseError("uncertified database: generated run was truncated")
    coloring = is_k_colorable(g, k)
    if coloring is not None:
        return (True, Certificate(coloring=coloring))
    for key, h in db.entries:
        hit = find_induced(g, h)
        if hit is not None:
            return (False, Certificate(embedding=hit, db_key=key))
    raise DatabaseError(
        "no critical witness found for a non-k-colorable graph; "
        "the database cannot be complete"
    )


def verify_certificate(
    g: Graph, k: int, cert: Certificate, db: CriticalDatabase
) -> bool:
    """Independent re-check of a certificate. The NO case checks that the
    embedding is injective, induced and matches the keyed database entry
    (whose (k+1)-vertex-criticality is the database invariant)."""
    if cert.coloring is not None:
        try:
            return verify_coloring(g, cert.coloring, k)
        except GraphError:
            return False
    if cert.embedding is None or cert.db_key is None:
        return False
    if db.k_plus_1 != k + 1:
        return False
    h = db.get(cert.db_key)
    if h is None:
        return False
    emb = cert.embedding
    if len(emb) != h.n or len(set(emb)) != h.n:
        return False
    if any(not 0 <= v < g.n for v in emb):
        return False
    for i in range(h.n):
        for j in range(i + 1, h.n):
            if g.has_edge(emb[i], emb[j]) != h.has_edge(i, j):
                return False
    return True
