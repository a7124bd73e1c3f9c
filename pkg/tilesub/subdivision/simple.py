"""
Simple pentagonal subdivision: every edge gains a midpoint and every face
is cut in two along the midpoints of its chosen opposite pair.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Tuple

from tilesub.gmap.builder import Side, glue_polygons
from tilesub.gmap.core import GMap
from tilesub.gmap.isomorphism import canonicalize_with_labels
from tilesub.models.schemas import Provenance, SubdivisionAssignment, VertexMark
from tilesub.subdivision.parity import validate_assignment
from tilesub.tiling.validate import require_quad_tiling
from tilesub.tiling.walks import FaceWalk, face_walks, side_forward

logger = logging.getLogger(__name__)


def side_info(g: GMap, walk: FaceWalk) -> List[Tuple[int, bool]]:
    """(edge id, forward) for each side of the walk."""
    return [(g.edge_of(walk.side(i)[0]), side_forward(g, walk.side(i)[0])) for i in range(walk.size)]


def half(edge: int, forward: bool, which: int) -> Side:
    """First (which=0) or second half of a side in walk order."""
    index = which if forward else 1 - which
    return Side(("half", edge, index), forward)


def marked_vertices(g: GMap, bases: List[int], corner_marks: List[List[object]]) -> Dict[int, object]:
    marks: Dict[int, object] = {}
    for base, row in zip(bases, corner_marks):
        for j, mark in enumerate(row):
            if mark is not None:
                marks[g.vertex_of(base + 2 * j)] = mark
    return marks


def sps_raw(g: GMap, assignment: SubdivisionAssignment) -> Tuple[GMap, Dict[int, Provenance]]:
    require_quad_tiling(g)
    validate_assignment(g, assignment)
    polygons = []
    corner_marks = []
    pattern = [Provenance.MIDPOINT, Provenance.ORIGINAL, Provenance.MIDPOINT, Provenance.ORIGINAL, Provenance.MIDPOINT]
    for fid, walk in face_walks(g).items():
        sides = side_info(g, walk)
        p = assignment.choice[fid]
        s = [sides[(p + k) % 4] for k in range(4)]
        cut = ("cut", fid)
        polygons.append([half(*s[0], 1), half(*s[1], 0), half(*s[1], 1), half(*s[2], 0), Side(cut, False)])
        polygons.append([half(*s[2], 1), half(*s[3], 0), half(*s[3], 1), half(*s[0], 0), Side(cut, True)])
        corner_marks.extend([pattern, pattern])
    out, bases = glue_polygons(polygons)
    return out, marked_vertices(out, bases, corner_marks)


def simple_pentagonal_subdivision(
    g: GMap, assignment: SubdivisionAssignment
) -> Tuple[GMap, Dict[int, Provenance]]:
    """Canonical pentagonal tiling plus original/midpoint provenance per vertex."""
    raw, provenance = sps_raw(g, assignment)
    canon, moved = canonicalize_with_labels(raw, provenance=provenance)
    logger.debug("simple pentagonal subdivision: %d faces -> %d", len(g.faces), len(canon.faces))
    return canon, moved["provenance"]


def filled_labeling(provenance: Dict[int, Provenance]) -> Dict[int, VertexMark]:
    """Original vertices become filled marks."""
    return {v: VertexMark.FILLED for v, p in provenance.items() if p == Provenance.ORIGINAL}
