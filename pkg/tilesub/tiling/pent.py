"""
Pentagon typing for simple pentagonal subdivisions.

A pentagon fits when it has exactly two filled corners, at positions i+2 and
i+4, and the other three corners are unlabeled degree-3 vertices. Side i,
the only side with both ends unlabeled, is the dotted side.
"""

from __future__ import annotations

import logging
from typing import Dict, Optional

from tilesub.errors import NotPentTiling
from tilesub.gmap.core import GMap
from tilesub.models.schemas import PentTileClass, VertexMark
from tilesub.tiling.neighborhood import neighborhood_orientable, self_glued_sides
from tilesub.tiling.walks import FaceRef, FaceWalk, edge_sequence, face_walk, vertex_sequence

logger = logging.getLogger(__name__)


def dotted_side_candidate(marks: list) -> Optional[int]:
    """Index i with filled corners exactly at i+2 and i+4, if any."""
    filled = [m == VertexMark.FILLED for m in marks]
    if sum(filled) != 2:
        return None
    for i in range(5):
        if filled[(i + 2) % 5] and filled[(i + 4) % 5]:
            return i
    return None


def _pent_walk(g: GMap, face: FaceRef) -> FaceWalk:
    walk = face_walk(g, face)
    if walk.size != 5:
        raise NotPentTiling(f"face {walk.face} has {walk.size} sides")
    return walk


def classify_pent_tile(g: GMap, face: FaceRef, labeling: Dict[int, VertexMark]) -> PentTileClass:
    walk = _pent_walk(g, face)
    vertices = vertex_sequence(g, walk)
    marks = [labeling.get(v) for v in vertices]
    if VertexMark.HOLLOW in marks:
        return PentTileClass(reason="hollow_vertex")
    i = dotted_side_candidate(marks)
    if i is None:
        return PentTileClass(reason="corner_pattern")
    unlabeled = [vertices[(i + k) % 5] for k in (0, 1, 3)]
    if any(g.degrees[v] != 3 for v in unlabeled):
        return PentTileClass(reason="unlabeled_degree")
    found = dict(dotted_side=i, dotted_edge=edge_sequence(g, walk)[i])
    pairs = self_glued_sides(g, walk)
    if pairs:
        if len(pairs) == 1 and pairs[0][2]:
            return PentTileClass(tag="P3", **found)
        return PentTileClass(reason="self_identification")
    if len(set(vertices)) == 5:
        return PentTileClass(tag="P1", **found)
    filled_a, filled_b = vertices[(i + 2) % 5], vertices[(i + 4) % 5]
    if filled_a == filled_b and len(set(unlabeled)) == 3 and len(set(vertices)) == 4:
        if not neighborhood_orientable(g, walk):
            return PentTileClass(tag="P2", **found)
        return PentTileClass(reason="p2_not_mobius")
    return PentTileClass(reason="vertex_identification")
