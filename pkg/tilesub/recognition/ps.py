"""
Recognize pentagonal subdivisions.

Read along a fixed orientation, every tile of a pentagonal subdivision shows
the corner pattern filled, 3, hollow, 3, 3 where 3 is an unmarked vertex of
degree 3. The hollow vertices are face centers: merging the pentagons
around each of them gives back the base polygons. Reading the other
orientation swaps the roles of filled and hollow and yields the dual base.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional

from tilesub.errors import DegenerateTile, Disconnected, NotOrientable, TilingError
from tilesub.gmap.core import GMap
from tilesub.gmap.isomorphism import are_isomorphic, canonical_form
from tilesub.gmap.surface import is_orientable, orientation
from tilesub.models.results import RecognitionResult
from tilesub.recognition.search import (
    FILLED, HOLLOW, LabelSearch, Requirements, best_accepted, degree_ok, merge_around,
    merge_requirements, rebuild_or_none, vertex_marks,
)
from tilesub.subdivision.pent import oriented_walks, pentagonal_subdivision
from tilesub.tiling.validate import require_pent_tiling
from tilesub.tiling.walks import FaceWalk, edge_sequence, face_walks, vertex_sequence

logger = logging.getLogger(__name__)

ORIENTED_PATTERN = (FILLED, ("deg", 3), HOLLOW, ("deg", 3), ("deg", 3))


def require_non_degenerate(g: GMap) -> Dict[int, FaceWalk]:
    walks = face_walks(g)
    for fid, walk in walks.items():
        if len(set(vertex_sequence(g, walk))) != walk.size or len(set(edge_sequence(g, walk))) != walk.size:
            raise DegenerateTile(fid)
    return walks


def _options(g: GMap, corner_lists: Dict[int, List[int]], patterns) -> Dict[int, List[Requirements]]:
    options = {}
    for fid, vertices in corner_lists.items():
        choices = []
        for pattern in patterns:
            for r in range(5):
                option = merge_requirements(
                    (("v", vertices[(r + k) % 5]), pattern[k]) for k in range(5)
                )
                if option is not None and degree_ok(g, option) and option not in choices:
                    choices.append(option)
        options[fid] = choices
    return options


def reproduces(base: GMap, g: GMap) -> bool:
    """Whether some orientation of base subdivides to g."""
    coloring = orientation(base)
    if coloring is None:
        return False
    for choice in (coloring, [1 - c for c in coloring]):
        if are_isomorphic(pentagonal_subdivision(base, choice)[0], g) is not None:
            return True
    return False


def _rebuild(g: GMap, requirements: Requirements) -> Optional[GMap]:
    hollow = [v for v, mark in vertex_marks(requirements).items() if mark == HOLLOW]
    base = rebuild_or_none(lambda: merge_around(g, hollow))
    if base is None:
        return None
    try:
        if reproduces(base, g):
            return canonical_form(base)
    except (TilingError, Disconnected) as exc:
        logger.info("candidate base rejected: %s", exc)
        return None
    logger.info("candidate base does not reproduce the input")
    return None


def _result(mode: str, g: GMap, search: LabelSearch) -> RecognitionResult:
    requirements, base, count = best_accepted(search, lambda req: _rebuild(g, req))
    labeling = vertex_marks(requirements)
    return RecognitionResult(
        mode=mode,
        base=base,
        labeling=labeling,
        solution_count=count,
        centers=sorted(v for v, mark in labeling.items() if mark == HOLLOW),
        orientable=is_orientable(g),
    )


def recognize_ps(g: GMap) -> RecognitionResult:
    """Pattern filled-3-hollow-3-3 along the orientation of g; the base may come back as its dual."""
    require_pent_tiling(g)
    coloring = orientation(g)
    if coloring is None:
        raise NotOrientable()
    require_non_degenerate(g)
    corners = {
        fid: [g.vertex_of(darts[2 * j]) for j in range(5)]
        for fid, darts in oriented_walks(g, coloring).items()
    }
    return _result("ps", g, LabelSearch(_options(g, corners, [ORIENTED_PATTERN])))


def recognize_one_circ(g: GMap) -> RecognitionResult:
    """One hollow vertex per tile, every other vertex of degree 3.

    A vertex whose degree is not 3 is forced hollow in each of its tiles, so
    a tile with two of them has no candidate. Success implies g is orientable.
    """
    require_pent_tiling(g)
    walks = require_non_degenerate(g)
    corners = {fid: vertex_sequence(g, walk) for fid, walk in walks.items()}
    patterns = [(HOLLOW, ("deg", 3), ("deg", 3), ("deg", 3), ("deg", 3))]
    result = _result("one-circ", g, LabelSearch(_options(g, corners, patterns)))
    logger.debug("one hollow vertex per tile, orientable=%s", result.orientable)
    return result
