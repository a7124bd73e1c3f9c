"""
Recognize quadrilateral subdivisions.

Each tile has a filled and a hollow vertex at opposite corners and
unmarked degree-4 midpoints at the other two. A tile is either Q, with four
distinct vertices, or Q', where the two midpoints are one vertex whose
neighborhood makes the tile a Mobius band. Merging the tiles around every
hollow vertex and smoothing the midpoints gives back the base.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional

from tilesub.errors import Disconnected, TilingError
from tilesub.gmap.core import GMap
from tilesub.gmap.isomorphism import are_isomorphic, canonical_form
from tilesub.gmap.surface import is_orientable
from tilesub.models.results import RecognitionResult
from tilesub.recognition.search import (
    FILLED, HOLLOW, LabelSearch, Requirements, best_accepted, degree_ok, merge_around,
    merge_requirements, rebuild_or_none, vertex_marks,
)
from tilesub.subdivision.quad import quadrilateral_subdivision
from tilesub.tiling.neighborhood import neighborhood_orientable, self_glued_sides
from tilesub.tiling.validate import require_quad_tiling
from tilesub.tiling.walks import FaceWalk, face_walks, vertex_sequence

logger = logging.getLogger(__name__)

PATTERN = (FILLED, ("deg", 4), HOLLOW, ("deg", 4))


def tile_shape(g: GMap, walk: FaceWalk, r: int) -> Optional[str]:
    """"Q", "Q'" or None for a tile read with its filled corner at r."""
    vertices = vertex_sequence(g, walk)
    if len(set(vertices)) == 4:
        return "Q"
    mid_a, mid_b = vertices[(r + 1) % 4], vertices[(r + 3) % 4]
    ends = {vertices[r], vertices[(r + 2) % 4]}
    if mid_a == mid_b and len(ends) == 2 and mid_a not in ends:
        if not self_glued_sides(g, walk) and not neighborhood_orientable(g, walk):
            return "Q'"
    return None


def quad_options(g: GMap) -> Dict[int, List[Requirements]]:
    options = {}
    for fid, walk in face_walks(g).items():
        vertices = vertex_sequence(g, walk)
        choices = []
        for r in range(4):
            if tile_shape(g, walk, r) is None:
                continue
            option = merge_requirements((("v", vertices[(r + k) % 4]), PATTERN[k]) for k in range(4))
            if option is not None and degree_ok(g, option):
                choices.append(option)
        options[fid] = choices
    return options


def _rebuild(g: GMap, requirements: Requirements) -> Optional[GMap]:
    hollow = [v for v, mark in vertex_marks(requirements).items() if mark == HOLLOW]
    base = rebuild_or_none(lambda: merge_around(g, hollow))
    if base is None:
        return None
    try:
        rebuilt = quadrilateral_subdivision(base)[0]
    except (TilingError, Disconnected) as exc:
        logger.info("candidate base rejected: %s", exc)
        return None
    if are_isomorphic(rebuilt, g) is None:
        logger.info("candidate base does not reproduce the input")
        return None
    return canonical_form(base)


def recognize_qs(g: GMap) -> RecognitionResult:
    """Raises NoLabeling when g is not a quadrilateral subdivision; the base may be the dual."""
    require_quad_tiling(g)
    search = LabelSearch(quad_options(g))
    requirements, base, count = best_accepted(search, lambda req: _rebuild(g, req))
    labeling = vertex_marks(requirements)
    shapes = {}
    for fid, walk in face_walks(g).items():
        vertices = vertex_sequence(g, walk)
        r = next(j for j in range(4) if labeling.get(vertices[j]) == FILLED)
        shapes[fid] = tile_shape(g, walk, r)
    return RecognitionResult(
        mode="qs",
        base=base,
        labeling=labeling,
        solution_count=count,
        centers=sorted(v for v, mark in labeling.items() if mark == HOLLOW),
        tile_types=shapes,
        orientable=is_orientable(g),
    )
