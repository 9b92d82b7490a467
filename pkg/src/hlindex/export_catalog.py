"""Write the catalog as data files and read it back.

A catalog directory holds three files:

- ``catalog.g6``: one graph6 line per entry, in catalog order
- ``catalog.jsonl``: one metadata record per entry, same order
- ``manifest.yaml``: generator version, entry count, provenance totals
"""

from __future__ import annotations

import importlib.metadata
import json
import os
from collections import Counter
from collections.abc import Iterable
from typing import Any

import yaml

from hlindex.core.codec import graph6_decode, graph6_encode
from hlindex.core.graph import VertexSet
from hlindex.errors import GraphError
from hlindex.models import (
    CatalogEntry,
    Claim,
    Eigenvector,
    Provenance,
    ResidualRecipe,
)

GRAPH6_FILE = "catalog.g6"
JSONL_FILE = "catalog.jsonl"
MANIFEST_FILE = "manifest.yaml"


def _get_version() -> str:
    """Return the installed hlindex version, or 'dev' if not installed."""
    try:
        return importlib.metadata.version("hlindex")
    except importlib.metadata.PackageNotFoundError:
        return "dev"


def _entry_record(e: CatalogEntry) -> dict[str, Any]:
    rec: dict[str, Any] = {
        "name": e.name,
        "n": e.graph.n,
        "graph6": graph6_encode(e.graph),
        "provenance": e.provenance.value,
        "marked": e.marked.to_list(),
        "claims": [c.to_dict() for c in e.claims],
        "labels": list(e.labels),
    }
    if e.certificate is not None:
        rec["certificate"] = e.certificate.to_dict()
    if e.residual is not None:
        rec["residual"] = {
            **e.residual.to_dict(),
            "residual_graph6": graph6_encode(e.residual.residual),
        }
    if e.derivation:
        rec["derivation"] = e.derivation
    return rec


def _entry_from_record(rec: dict[str, Any], graph6_line: str) -> CatalogEntry:
    if rec["graph6"] != graph6_line:
        raise GraphError(f"entry {rec['name']}: graph6 line does not match its metadata")
    g = graph6_decode(graph6_line)
    residual = None
    if "residual" in rec:
        r = rec["residual"]
        residual = ResidualRecipe(
            squares=None if r["squares"] is None else tuple(r["squares"]),
            size=r["size"],
            residual_name=r["residual"],
            residual=graph6_decode(r["residual_graph6"]),
            k=r["k"],
            mode=r["mode"],
        )
    return CatalogEntry(
        name=rec["name"],
        graph=g,
        marked=VertexSet.of(g.n, rec["marked"]),
        claims=tuple(Claim.from_dict(c) for c in rec["claims"]),
        provenance=Provenance(rec["provenance"]),
        labels=tuple(rec.get("labels", ())),
        certificate=Eigenvector.from_dict(rec["certificate"]) if "certificate" in rec else None,
        residual=residual,
        derivation=rec.get("derivation", ""),
    )


def export_catalog(entries: Iterable[CatalogEntry], output_dir: str) -> str:
    """Write ``catalog.g6``, ``catalog.jsonl`` and ``manifest.yaml``.

    Returns the output directory path.
    """
    os.makedirs(output_dir, exist_ok=True)
    entries = list(entries)
    records = [_entry_record(e) for e in entries]

    with open(os.path.join(output_dir, GRAPH6_FILE), "w", encoding="utf-8") as f:
        for rec in records:
            f.write(rec["graph6"] + "\n")

    with open(os.path.join(output_dir, JSONL_FILE), "w", encoding="utf-8") as f:
        for rec in records:
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")

    totals = Counter(e.provenance.value for e in entries)
    manifest = {
        "name": "hlindex catalog",
        "generator": f"hlindex v{_get_version()}",
        "entry_count": len(entries),
        "provenance": {p.value: totals.get(p.value, 0) for p in Provenance},
        "contents": [
            {"path": GRAPH6_FILE, "description": "One graph6 line per entry"},
            {"path": JSONL_FILE, "description": "Marked sets, claims, certificates and residuals"},
        ],
        "entries": [e.name for e in entries],
    }
    with open(os.path.join(output_dir, MANIFEST_FILE), "w", encoding="utf-8") as f:
        yaml.dump(manifest, f, default_flow_style=False, sort_keys=False)

    return output_dir


def load_catalog(catalog_dir: str) -> list[CatalogEntry]:
    """Read a directory written by :func:`export_catalog`."""
    manifest_path = os.path.join(catalog_dir, MANIFEST_FILE)
    if not os.path.isfile(manifest_path):
        raise GraphError(f"missing {MANIFEST_FILE} in {catalog_dir}")
    with open(manifest_path, encoding="utf-8") as f:
        try:
            manifest = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise GraphError(f"invalid {MANIFEST_FILE}: {e}") from e

    with open(os.path.join(catalog_dir, GRAPH6_FILE), encoding="utf-8") as f:
        lines = [line.strip() for line in f if line.strip()]
    records = []
    with open(os.path.join(catalog_dir, JSONL_FILE), encoding="utf-8") as f:
        for line_num, raw_line in enumerate(f, 1):
            stripped = raw_line.strip()
            if not stripped:
                continue
            try:
                records.append(json.loads(stripped))
            except json.JSONDecodeError as e:
                raise GraphError(f"{JSONL_FILE} line {line_num}: {e}") from e

    if len(lines) != len(records):
        raise GraphError(f"{GRAPH6_FILE} has {len(lines)} graphs but {JSONL_FILE} has {len(records)} records")
    expected = manifest.get("entry_count")
    if expected is not None and expected != len(records):
        raise GraphError(f"manifest lists {expected} entries, files hold {len(records)}")
    return [_entry_from_record(rec, line) for rec, line in zip(records, lines, strict=True)]
