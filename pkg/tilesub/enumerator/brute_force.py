"""Literal check of the once-per-edge midpoint rule over every face choice."""

from __future__ import annotations

import itertools
import logging
from typing import List, Optional, Tuple

from tilesub.config.settings import BRUTE_FORCE_MAX_FACES
from tilesub.errors import TooLarge
from tilesub.gmap.core import GMap
from tilesub.models.schemas import SubdivisionAssignment
from tilesub.tiling.validate import require_quad_tiling
from tilesub.tiling.walks import face_walks

logger = logging.getLogger(__name__)


def brute_force_subdivisible(g: GMap, limit: Optional[int] = None) -> Tuple[bool, List[SubdivisionAssignment]]:
    """All assignments under which every edge midpoint is used exactly once."""
    require_quad_tiling(g)
    limit = BRUTE_FORCE_MAX_FACES if limit is None else limit
    walks = face_walks(g)
    faces = sorted(walks)
    if len(faces) > limit:
        raise TooLarge(len(faces), limit)
    # pairs[f][b] = edges whose midpoints face f joins under bit b
    pairs = {}
    for f, walk in walks.items():
        edges = [g.edge_of(walk.side(i)[0]) for i in range(4)]
        pairs[f] = ((edges[0], edges[2]), (edges[1], edges[3]))
    solutions = []
    for bits in itertools.product((0, 1), repeat=len(faces)):
        usage = dict.fromkeys((e.id for e in g.edges), 0)
        for f, b in zip(faces, bits):
            for e in pairs[f][b]:
                usage[e] += 1
        if all(count == 1 for count in usage.values()):
            solutions.append(SubdivisionAssignment(choice=dict(zip(faces, bits))))
    logger.debug("brute force: %d of %d assignments valid", len(solutions), 2 ** len(faces))
    return bool(solutions), solutions
