"""
Named tilings and a builder for subdivisible tilings of any closed surface.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import List

from tilesub.catalogue.entries import ENTRIES
from tilesub.errors import UnknownName
from tilesub.gmap.builder import from_vertex_cycles, from_words
from tilesub.gmap.core import GMap
from tilesub.gmap.isomorphism import canonical_form
from tilesub.gmap.surface import parse_surface_word
from tilesub.models.results import CatalogueEntry, ExpectedRecord
from tilesub.subdivision.connected_sum import connected_sum_subdivisible, first_q_face
from tilesub.subdivision.refine import refine3

logger = logging.getLogger(__name__)


def names() -> List[str]:
    return sorted(ENTRIES)


@lru_cache(maxsize=None)
def get(name: str) -> CatalogueEntry:
    if name not in ENTRIES:
        raise UnknownName(name, names())
    data = ENTRIES[name]
    if "words" in data:
        raw = from_words(data["words"])
    else:
        raw = from_vertex_cycles(data["cycles"])
    logger.debug("built catalogue entry %s with %d darts", name, raw.dart_count)
    return CatalogueEntry(
        name=name,
        map=canonical_form(raw),
        expected=ExpectedRecord(**data["expected"]),
    )


def get_map(name: str) -> GMap:
    return get(name).map


def _sum_copies(piece: GMap, copies: int) -> GMap:
    result = piece
    for _ in range(copies - 1):
        result, alignment = connected_sum_subdivisible(result, first_q_face(result), piece, first_q_face(piece))
        logger.debug("connected sum used alignment %d", alignment)
    return result


@lru_cache(maxsize=None)
def surface_tiling(word: str) -> GMap:
    """A subdivisible tiling of the surface built from non-degenerate tiles only.

    S2 is the cube, kT2 sums k copies of the 2x2 torus grid and kP2 sums k
    copies of the refined projective-plane entry.
    """
    orientable, euler = parse_surface_word(word)
    if orientable:
        genus = (2 - euler) // 2
        if genus == 0:
            return get_map("cube")
        return _sum_copies(get_map("torus_2x2"), genus)
    return _sum_copies(refine3(get_map("p2_from_2gon")), 2 - euler)
