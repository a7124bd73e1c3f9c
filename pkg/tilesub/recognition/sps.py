"""
Recognize simple pentagonal subdivisions.

In a subdivided tiling every pentagon has filled (original) corners at i+2
and i+4, unmarked degree-3 corners elsewhere, and its side i is the dotted
cut shared with the other half of the same quadrilateral. Undoing the
subdivision deletes the dotted edges and smooths the midpoints.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional

from tilesub.errors import Disconnected, TilingError
from tilesub.gmap.core import GMap
from tilesub.gmap.isomorphism import are_isomorphic, canonical_form
from tilesub.gmap.surgery import DartTable
from tilesub.models.results import RecognitionResult
from tilesub.models.schemas import ParityWitness
from tilesub.recognition.search import (
    FILLED, LabelSearch, Requirements, best_accepted, degree_ok, merge_requirements,
    rebuild_or_none, smooth_all, vertex_marks,
)
from tilesub.subdivision.parity import check_subdivisible, dual_assignment
from tilesub.subdivision.simple import simple_pentagonal_subdivision
from tilesub.tiling.pent import classify_pent_tile
from tilesub.tiling.validate import require_pent_tiling
from tilesub.tiling.walks import edge_sequence, face_walks, vertex_sequence

logger = logging.getLogger(__name__)

DOTTED = "dotted"
PLAIN = "plain"


def dotted_options(g: GMap) -> Dict[int, List[Requirements]]:
    options = {}
    for fid, walk in face_walks(g).items():
        vertices = vertex_sequence(g, walk)
        edges = edge_sequence(g, walk)
        choices = []
        for i in range(5):
            pairs = [(("e", e), DOTTED if k == i else PLAIN) for k, e in enumerate(edges)]
            for k in (0, 1, 3):
                pairs.append((("v", vertices[(i + k) % 5]), ("deg", 3)))
            for k in (2, 4):
                pairs.append((("v", vertices[(i + k) % 5]), FILLED))
            option = merge_requirements(pairs)
            if option is not None and degree_ok(g, option):
                choices.append(option)
        options[fid] = choices
    return options


def _dotted_edges(requirements: Requirements) -> List[int]:
    return sorted(cell for (kind, cell), value in requirements.items() if kind == "e" and value == DOTTED)


def undo_simple_subdivision(g: GMap, dotted: List[int]) -> GMap:
    table = DartTable(g)
    for e in dotted:
        table.remove_edge(e)
    smooth_all(table)
    return table.compact()[0]


def _rebuild(g: GMap, requirements: Requirements) -> Optional[GMap]:
    base = rebuild_or_none(lambda: undo_simple_subdivision(g, _dotted_edges(requirements)))
    if base is None:
        return None
    try:
        assignment = check_subdivisible(base)
    except (TilingError, Disconnected) as exc:
        logger.info("candidate base rejected: %s", exc)
        return None
    if isinstance(assignment, ParityWitness):
        return None
    for choice in (assignment, dual_assignment(assignment)):
        if are_isomorphic(simple_pentagonal_subdivision(base, choice)[0], g) is not None:
            return canonical_form(base)
    logger.info("candidate base does not reproduce the input")
    return None


def recognize_sps(g: GMap) -> RecognitionResult:
    """Raises NoLabeling when g is not a simple pentagonal subdivision."""
    require_pent_tiling(g)
    search = LabelSearch(dotted_options(g))
    requirements, base, count = best_accepted(search, lambda req: _rebuild(g, req))
    labeling = vertex_marks(requirements)
    dotted_edges: Dict[int, int] = {}
    tile_types: Dict[int, str] = {}
    for fid, walk in face_walks(g).items():
        tile = classify_pent_tile(g, fid, labeling)
        dotted_edges[fid] = next(e for e in edge_sequence(g, walk) if requirements[("e", e)] == DOTTED)
        tile_types[fid] = tile.tag if tile.matches else f"Mismatch:{tile.reason}"
    logger.debug("recognized simple subdivision of a %d-face base", len(base.faces))
    return RecognitionResult(
        mode="sps",
        base=base,
        labeling=labeling,
        solution_count=count,
        dotted_edges=dotted_edges,
        tile_types=tile_types,
    )
