"""
Quadrilateral tiles: the 13 admissible degeneracy classes, their
neighborhood signatures, and the minimal surfaces they embed into.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from tilesub.errors import Forbidden, NotQuadTiling
from tilesub.gmap.core import GMap
from tilesub.gmap.surface import parse_surface_word
from tilesub.models.schemas import MinSurface, NbhdSignature, TileClass
from tilesub.tiling.neighborhood import (
    boundary_circles,
    neighborhood_orientable,
    self_glued_sides,
    tile_euler,
)
from tilesub.tiling.walks import FaceRef, FaceWalk, face_walk, vertex_sequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TableRow:
    circles: Tuple[Tuple[int, int], ...]
    euler: int
    orientable: bool
    min_surface: MinSurface

    def signature(self) -> NbhdSignature:
        return NbhdSignature(boundary_circles=list(self.circles), euler=self.euler, orientable=self.orientable)


def _min(word: str, rule: str, description: str) -> MinSurface:
    return MinSurface(word=word, rule=rule, description=description)


TABLE: Dict[str, TableRow] = {
    "Q": TableRow(((4, 0),), 1, True, _min("S2", "any", "disk, any surface")),
    "Q12": TableRow(((4, 2),), 0, False, _min("P2^1", "any", "P2 minus a disk")),
    "Q13": TableRow(((2, 1), (2, 1)), 0, True, _min("S2", "any", "S2 minus two disks")),
    "Q123": TableRow(((2, 1), (2, 2)), -1, False, _min("P2^1", "any", "P2 minus two disks")),
    "Q132": TableRow(((4, 3),), -1, False, _min("P2^2", "any", "2P2 minus a disk")),
    "Q1234": TableRow(((2, 2), (2, 2)), -2, False, _min("P2^2", "any", "2P2 minus two disks")),
    "Q1243": TableRow(((4, 4),), -2, False, _min("P2^3", "any", "3P2 minus a disk")),
    "Q12_34": TableRow(((4, 4),), -1, False, _min("P2^2", "any", "2P2 minus a disk")),
    "Q13_24": TableRow(((4, 4),), -1, True, _min("T2^1", "torus_family", "T2 minus a disk; kT2 (k>=1) or kP2 (k>=3)")),
    "R": TableRow(((2, 1),), 0, False, _min("P2^1", "any", "P2 minus a disk")),
    "R1": TableRow(((1, 1), (1, 1)), -1, False, _min("P2^2", "nonorientable_at_least", "P2 minus two disks; kP2 with k>=2")),
    "R2": TableRow(((2, 2),), -1, False, _min("P2^2", "any", "2P2 minus a disk")),
    "K": TableRow((), 0, False, _min("P2^2", "exact", "the Klein bottle itself")),
}


def _quad_walk(g: GMap, face: FaceRef) -> FaceWalk:
    walk = face_walk(g, face)
    if walk.size != 4:
        raise NotQuadTiling(f"face {walk.face} has {walk.size} sides")
    return walk


def _signature(g: GMap, walk: FaceWalk) -> NbhdSignature:
    return NbhdSignature(
        boundary_circles=boundary_circles(g, walk),
        euler=tile_euler(g, walk),
        orientable=neighborhood_orientable(g, walk),
    )


def _adjacent(i: int, j: int) -> bool:
    return (j - i) % 4 in (1, 3)


def _tag_from_shape(g: GMap, walk: FaceWalk, circles: int) -> str:
    pairs = self_glued_sides(g, walk)
    vertices = vertex_sequence(g, walk)
    if pairs:
        if len(pairs) == 2:
            return "K"
        i, j, _ = pairs[0]
        # written as (s, s+1) mod 4, a twisted pair folds corners s, s+1, s+2
        # onto one vertex; (0, 3) is the pair (3, 0)
        s = i if (j - i) % 4 == 1 else j
        if vertices[(s + 3) % 4] != vertices[s]:
            return "R"
        return "R1" if circles == 2 else "R2"
    blocks: Dict[int, List[int]] = {}
    for j, v in enumerate(vertices):
        blocks.setdefault(v, []).append(j)
    repeated = sorted(b for b in blocks.values() if len(b) >= 2)
    if not repeated:
        return "Q"
    if len(repeated) == 2:
        return "Q12_34" if _adjacent(*repeated[0]) else "Q13_24"
    block = repeated[0]
    if len(block) == 2:
        return "Q12" if _adjacent(*block) else "Q13"
    if len(block) == 3:
        return "Q123" if circles == 2 else "Q132"
    return "Q1234" if circles == 2 else "Q1243"


def classify_quad_tile(g: GMap, face: FaceRef) -> TileClass:
    """Tag of an admissible tile, or the reason it cannot occur."""
    walk = _quad_walk(g, face)
    pairs = self_glued_sides(g, walk)
    for i, j, twisted in pairs:
        if _adjacent(i, j) and not twisted:
            return TileClass(reason="adjacent_opposing_identification")
    for i, j, _ in pairs:
        if not _adjacent(i, j):
            return TileClass(reason="opposite_edge_identification")
    signature = _signature(g, walk)
    tag = _tag_from_shape(g, walk, len(signature.boundary_circles))
    if signature != TABLE[tag].signature():
        logger.debug("face %d shaped %s has signature %s", walk.face, tag, signature)
        return TileClass(reason="vertex_orientation_conflict")
    return TileClass(tag=tag)


def tile_neighborhood_signature(g: GMap, face: FaceRef) -> NbhdSignature:
    walk = _quad_walk(g, face)
    result = classify_quad_tile(g, walk.face)
    if not result.admissible:
        raise Forbidden(result.reason, walk.face)
    return _signature(g, walk)


def classify_all(g: GMap) -> Dict[int, TileClass]:
    return {f.id: classify_quad_tile(g, f.id) for f in g.faces}


def table_row(tag: str) -> TableRow:
    return TABLE[tag]


def min_surface(tag: str) -> MinSurface:
    if tag not in TABLE:
        raise KeyError(f"unknown tile class {tag}")
    return TABLE[tag].min_surface


def admissible_tiles(word: str) -> List[str]:
    """Tile classes that can occur in a quadrilateral tiling of the surface."""
    orientable, euler = parse_surface_word(word)
    return [tag for tag, row in TABLE.items() if row.min_surface.admits(orientable, euler)]


def require_admissible(g: GMap) -> Dict[int, TileClass]:
    """Classes of every face; raises Forbidden at the first inadmissible one."""
    classes = classify_all(g)
    for fid, result in classes.items():
        if not result.admissible:
            raise Forbidden(result.reason, fid)
    return classes
