"""
The gmap2-v1 exchange format.

Documents are always written for the canonical form, with sorted keys and no
insignificant whitespace, so isomorphic maps serialize to identical bytes.
"""

from __future__ import annotations

import json
import logging
from typing import Dict, Optional, Tuple

from pydantic import ValidationError

from tilesub.config.settings import DOCUMENT_FORMAT
from tilesub.errors import DocumentError, MapError
from tilesub.gmap.core import GMap, build_gmap
from tilesub.gmap.isomorphism import canonicalize_with_labels
from tilesub.models.schemas import GMapDocument, LabelsBlock, Provenance, VertexMark
from tilesub.utils.helpers import canonical_json, string_keys

logger = logging.getLogger(__name__)


def to_document(
    g: GMap,
    vertex_marks: Optional[Dict[int, VertexMark]] = None,
    provenance: Optional[Dict[int, Provenance]] = None,
    assignment: Optional[Dict[int, int]] = None,
) -> Dict:
    canon, moved = canonicalize_with_labels(
        g, vertex_marks=vertex_marks, provenance=provenance, assignment=assignment
    )
    doc = GMapDocument(
        format=DOCUMENT_FORMAT,
        darts=canon.dart_count,
        alpha0=list(canon.alpha0),
        alpha1=list(canon.alpha1),
        alpha2=list(canon.alpha2),
    )
    if moved:
        doc.labels = LabelsBlock(**{name: string_keys(values) for name, values in moved.items()})
    return doc.model_dump(mode="json", exclude_none=True)


def dump_map(g: GMap, **labels) -> str:
    return canonical_json(to_document(g, **labels))


def _position(error: json.JSONDecodeError) -> Dict[str, int]:
    return {"line": error.lineno, "column": error.colno, "offset": error.pos}


def load_document(text: str) -> Tuple[GMap, Optional[LabelsBlock]]:
    """Parse a gmap2-v1 document; labels must name cells of the stored map."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"malformed JSON: {e.msg}", _position(e)) from e
    try:
        doc = GMapDocument.model_validate(raw)
    except ValidationError as e:
        raise DocumentError(f"invalid {DOCUMENT_FORMAT} document: {e.errors()[0]['msg']}") from e
    if doc.format != DOCUMENT_FORMAT:
        raise DocumentError(f"unsupported format {doc.format!r}")
    try:
        g = build_gmap(doc.darts, doc.alpha0, doc.alpha1, doc.alpha2)
    except MapError as e:
        logger.error("rejected map document: %s", e)
        raise
    if doc.labels is not None:
        _check_label_ids(g, doc.labels)
    return g, doc.labels


def _check_label_ids(g: GMap, labels: LabelsBlock) -> None:
    vertex_ids = {v.id for v in g.vertices}
    face_ids = {f.id for f in g.faces}
    checks = (
        (labels.vertex_marks, vertex_ids, "vertex"),
        (labels.provenance, vertex_ids, "vertex"),
        (labels.assignment, face_ids, "face"),
    )
    for mapping, valid, kind in checks:
        for key in (mapping or {}):
            if not key.isdigit() or int(key) not in valid:
                raise DocumentError(f"label key {key!r} is not a {kind} id of the map")


def int_keys(mapping: Optional[Dict[str, object]]) -> Optional[Dict[int, object]]:
    if mapping is None:
        return None
    return {int(k): v for k, v in mapping.items()}
