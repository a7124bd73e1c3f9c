"""
Connected sum of two quadrilateral tilings along a non-degenerate tile of
each. The two deleted squares are matched by one of 8 alignments: a corner
offset k in 0..3 and a flip bit, encoded as 2k + flip.
"""

from __future__ import annotations

import logging
from typing import List, Tuple

from tilesub.errors import Disconnected, NoSubdivisibleAlignment, TileNotNonDegenerate
from tilesub.gmap.core import GMap, disjoint_union, is_connected
from tilesub.gmap.isomorphism import canonical_form
from tilesub.gmap.surgery import DartTable
from tilesub.subdivision.parity import is_subdivisible
from tilesub.tiling.quad import classify_quad_tile
from tilesub.tiling.walks import FaceRef, face_walk, resolve_face

logger = logging.getLogger(__name__)

ALIGNMENTS = tuple(range(8))


def _require_q(g: GMap, face: FaceRef) -> int:
    fid = resolve_face(g, face)
    if not is_connected(g):
        raise Disconnected()
    tile = classify_quad_tile(g, fid)
    if tile.tag != "Q":
        raise TileNotNonDegenerate(fid, tile.label)
    return fid


def _target_position(p: int, alignment: int) -> int:
    k, flip = divmod(alignment, 2)
    return (2 * k + 1 - p) % 8 if flip else (p + 2 * k) % 8


def connected_sum_raw(a: GMap, fa: FaceRef, b: GMap, fb: FaceRef, alignment: int) -> GMap:
    if alignment not in ALIGNMENTS:
        raise ValueError(f"alignment must be in 0..7, got {alignment}")
    fa_id, fb_id = _require_q(a, fa), _require_q(b, fb)
    union = disjoint_union(a, b)
    walk_a = face_walk(a, fa_id).darts
    walk_b = tuple(d + a.dart_count for d in face_walk(b, fb_id).darts)
    table = DartTable(union)
    for p, d in enumerate(walk_a):
        x = union.alpha2[d]
        y = union.alpha2[walk_b[_target_position(p, alignment)]]
        table.a2[x], table.a2[y] = y, x
    for d in walk_a + walk_b:
        table.alive[d] = False
    out, _ = table.compact()
    return out


def connected_sum(a: GMap, fa: FaceRef, b: GMap, fb: FaceRef, alignment: int) -> GMap:
    return canonical_form(connected_sum_raw(a, fa, b, fb, alignment))


def connected_sum_alignments(a: GMap, fa: FaceRef, b: GMap, fb: FaceRef) -> List[GMap]:
    return [connected_sum(a, fa, b, fb, k) for k in ALIGNMENTS]


def connected_sum_subdivisible(a: GMap, fa: FaceRef, b: GMap, fb: FaceRef) -> Tuple[GMap, int]:
    """First alignment whose result is subdivisible."""
    for k in ALIGNMENTS:
        raw = connected_sum_raw(a, fa, b, fb, k)
        if is_subdivisible(raw):
            return canonical_form(raw), k
        logger.info("connected-sum alignment %d is not subdivisible", k)
    raise NoSubdivisibleAlignment()


def first_q_face(g: GMap) -> int:
    for f in g.faces:
        if classify_quad_tile(g, f.id).tag == "Q":
            return f.id
    raise TileNotNonDegenerate(g.faces[0].id if g.faces else -1, "no Q tile")
