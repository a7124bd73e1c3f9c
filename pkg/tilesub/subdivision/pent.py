"""
Pentagonal subdivision T(5).

Each face is walked along a fixed orientation; every edge is cut into three
segments and the face center is joined to the first dividing point of each
side. Adjacent faces walk a shared edge in opposite directions, so each
dividing point receives exactly one spoke.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from tilesub.errors import NotOrientable
from tilesub.gmap.builder import Side, glue_polygons
from tilesub.gmap.core import GMap
from tilesub.gmap.isomorphism import canonicalize_with_labels
from tilesub.gmap.surface import orientation as dart_orientation
from tilesub.models.schemas import VertexMark
from tilesub.subdivision.simple import marked_vertices
from tilesub.tiling.validate import require_tiling
from tilesub.tiling.walks import walk_from, side_forward

logger = logging.getLogger(__name__)


def oriented_walks(t: GMap, coloring: List[int]) -> Dict[int, Tuple[int, ...]]:
    """Face id -> walk from the face's smallest color-0 dart, alpha0 first."""
    walks = {}
    for f in t.faces:
        start = min(d for d in f.darts if coloring[d] == 0)
        walks[f.id] = walk_from(t, start)
    return walks


def pentagonal_subdivision_raw(
    t: GMap, orientation: Optional[List[int]] = None
) -> Tuple[GMap, Dict[int, VertexMark]]:
    require_tiling(t)
    coloring = orientation if orientation is not None else dart_orientation(t)
    if coloring is None:
        raise NotOrientable()
    polygons = []
    corner_marks = []
    for fid, walk in oriented_walks(t, coloring).items():
        k = len(walk) // 2
        sides = []
        for i in range(k):
            start = walk[2 * i]
            sides.append((t.edge_of(start), side_forward(t, start)))

        def segment(i: int, j: int) -> Side:
            edge, forward = sides[i % k]
            return Side(("seg", edge, j if forward else 2 - j), forward)

        for i in range(k):
            polygons.append([
                Side(("spoke", fid, i), True),
                segment(i, 1),
                segment(i, 2),
                segment(i + 1, 0),
                Side(("spoke", fid, (i + 1) % k), False),
            ])
            corner_marks.append([VertexMark.HOLLOW, None, None, VertexMark.FILLED, None])
    out, bases = glue_polygons(polygons)
    return out, marked_vertices(out, bases, corner_marks)


def pentagonal_subdivision(
    t: GMap, orientation: Optional[List[int]] = None
) -> Tuple[GMap, Dict[int, VertexMark]]:
    raw, marks = pentagonal_subdivision_raw(t, orientation)
    canon, moved = canonicalize_with_labels(raw, vertex_marks=marks)
    logger.debug("pentagonal subdivision: %d faces -> %d", len(t.faces), len(canon.faces))
    return canon, moved["vertex_marks"]
