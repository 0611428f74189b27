"""Canonical JSON files for collections.

A collection file is a single JSON object {"format": 1, "n": ..., "k": ...,
"sets": [[...], ...]} with members sorted ascending and listed in canonical
lexicographic order, plus an optional "meta" object.  Saving always emits
canonical bytes, so load followed by save round-trips byte-identically.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from .crossing import Collection
from .cyclic import InvalidRange

FORMAT_VERSION = 1


class CollectionFileError(ValueError):
    """Malformed collection file; message carries line context when known."""


def collection_to_json(C: Collection, meta: Optional[dict] = None) -> str:
    doc: dict = {
        "format": FORMAT_VERSION,
        "n": C.n,
        "k": C.k,
        "sets": [list(s) for s in C.sets],
    }
    if meta:
        doc["meta"] = meta
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def save_collection(C: Collection, path: Union[str, Path], meta: Optional[dict] = None) -> None:
    Path(path).write_text(collection_to_json(C, meta), encoding="utf-8")


def parse_collection(text: str) -> tuple[Collection, Optional[dict]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CollectionFileError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise CollectionFileError("top-level value must be an object")
    for key in ("n", "k", "sets"):
        if key not in doc:
            raise CollectionFileError(f"missing required key {key!r}")
    if doc.get("format", FORMAT_VERSION) != FORMAT_VERSION:
        raise CollectionFileError(f"unsupported format version {doc['format']!r}")
    n, k, sets = doc["n"], doc["k"], doc["sets"]
    if not isinstance(n, int) or not isinstance(k, int) or not isinstance(sets, list):
        raise CollectionFileError("keys n, k must be integers and sets a list")
    try:
        C = Collection(n, k, sets)
    except (InvalidRange, TypeError) as exc:
        raise CollectionFileError(f"invalid collection data: {exc}") from None
    meta = doc.get("meta")
    if meta is not None and not isinstance(meta, dict):
        raise CollectionFileError('"meta" must be an object when present')
    return C, meta


def load_collection(path: Union[str, Path]) -> tuple[Collection, Optional[dict]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CollectionFileError(f"cannot read {path}: {exc}") from None
    return parse_collection(text)
