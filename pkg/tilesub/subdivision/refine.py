"""3x3 refinement of a quadrilateral tiling."""

from __future__ import annotations

import logging

from tilesub.gmap.builder import Side, glue_polygons
from tilesub.gmap.core import GMap
from tilesub.gmap.isomorphism import canonical_form
from tilesub.subdivision.simple import side_info
from tilesub.tiling.validate import require_quad_tiling
from tilesub.tiling.walks import face_walks

logger = logging.getLogger(__name__)


def refine3_raw(g: GMap) -> GMap:
    require_quad_tiling(g)
    polygons = []
    for fid, walk in face_walks(g).items():
        sides = side_info(g, walk)

        def boundary(i: int, k: int) -> Side:
            edge, forward = sides[i]
            return Side(("seg", edge, k if forward else 2 - k), forward)

        for y in range(3):
            for x in range(3):
                bottom = boundary(0, x) if y == 0 else Side(("grid", fid, "h", x, y), True)
                right = boundary(1, y) if x == 2 else Side(("grid", fid, "v", x + 1, y), True)
                top = boundary(2, 2 - x) if y == 2 else Side(("grid", fid, "h", x, y + 1), False)
                left = boundary(3, 2 - y) if x == 0 else Side(("grid", fid, "v", x, y), False)
                polygons.append([bottom, right, top, left])
    out, _ = glue_polygons(polygons)
    return out


def refine3(g: GMap) -> GMap:
    out = canonical_form(refine3_raw(g))
    logger.debug("refine3: %d faces -> %d", len(g.faces), len(out.faces))
    return out
