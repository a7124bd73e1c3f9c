"""
File handling for the command line: gmap2-v1 documents in and out, JSON
output on stdout, and DOT export of the 1-skeleton.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from tilesub.errors import DocumentError
from tilesub.gmap.core import GMap
from tilesub.gmap.serialization import int_keys, load_document
from tilesub.models.schemas import LabelsBlock, VertexMark
from tilesub.subdivision.homology import skeleton
from tilesub.utils.helpers import canonical_json

logger = logging.getLogger(__name__)


def read_map(path: str) -> Tuple[GMap, Optional[LabelsBlock]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    return load_document(text)


def write_text(text: str, path: Optional[str]) -> None:
    """Write to the file, or to stdout when no path is given."""
    if path is None:
        print(text)
        return
    Path(path).write_text(text + "\n", encoding="utf-8")
    logger.info("wrote %s", path)


def emit(payload: Any) -> None:
    print(canonical_json(payload))


def read_marks(labels: Optional[LabelsBlock]) -> Dict[int, VertexMark]:
    if labels is None:
        return {}
    return int_keys(labels.vertex_marks) or {}


def to_dot(g: GMap, vertex_marks: Optional[Dict[int, VertexMark]] = None) -> str:
    """Undirected multigraph; nodes are canonical vertex ids, edges keep their edge id."""
    marks = vertex_marks or {}
    graph = skeleton(g)
    lines = ["graph skeleton", "{"]
    for node in sorted(graph.nodes()):
        attrs = f' [mark="{marks[node].value}"]' if node in marks else ""
        lines.append(f"    v{node}{attrs};")
    for u, v, key in sorted(graph.edges(keys=True), key=lambda item: item[2]):
        lines.append(f'    v{u} -- v{v} [edge="{key}"];')
    lines.append("}")
    return "\n".join(lines)
