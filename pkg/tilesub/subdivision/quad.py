"""
Quadrilateral subdivision T(4): join each face center to the midpoints of
its sides. Original vertices are filled, centers hollow.
"""

from __future__ import annotations

import logging
from typing import Dict, Tuple

from tilesub.gmap.builder import Side, glue_polygons
from tilesub.gmap.core import GMap
from tilesub.gmap.isomorphism import canonicalize_with_labels
from tilesub.models.schemas import VertexMark
from tilesub.subdivision.simple import marked_vertices, half, side_info
from tilesub.tiling.validate import require_tiling
from tilesub.tiling.walks import face_walks

logger = logging.getLogger(__name__)


def quadrilateral_subdivision_raw(t: GMap) -> Tuple[GMap, Dict[int, VertexMark]]:
    require_tiling(t)
    polygons = []
    corner_marks = []
    for fid, walk in face_walks(t).items():
        sides = side_info(t, walk)
        k = walk.size
        for i in range(k):
            polygons.append([
                half(*sides[i], 0),
                Side(("spoke", fid, i), False),
                Side(("spoke", fid, (i - 1) % k), True),
                half(*sides[(i - 1) % k], 1),
            ])
            corner_marks.append([VertexMark.FILLED, None, VertexMark.HOLLOW, None])
    out, bases = glue_polygons(polygons)
    return out, marked_vertices(out, bases, corner_marks)


def quadrilateral_subdivision(t: GMap) -> Tuple[GMap, Dict[int, VertexMark]]:
    raw, marks = quadrilateral_subdivision_raw(t)
    canon, moved = canonicalize_with_labels(raw, vertex_marks=marks)
    logger.debug("quadrilateral subdivision: %d faces -> %d", len(t.faces), len(canon.faces))
    return canon, moved["vertex_marks"]
