"""
Build maps by gluing polygons along keyed sides.

Polygon p with sides s_0..s_{k-1} owns darts base..base+2k-1. Side i runs
from dart base+2i (its start) to base+2i+1 (its end); alpha1 joins the end
of side i to the start of side i+1. Two sides carrying the same key are one
edge; the `forward` flags say whether each side runs along the edge's
reference direction.
"""

from __future__ import annotations

import logging
from typing import Dict, Hashable, List, NamedTuple, Sequence, Tuple

from tilesub.errors import MalformedMap
from tilesub.gmap.core import GMap, build_gmap

logger = logging.getLogger(__name__)


class Side(NamedTuple):
    key: Hashable
    forward: bool = True


def glue_polygons(polygons: Sequence[Sequence[Side]]) -> Tuple[GMap, List[int]]:
    """Glue the polygons; returns the map and the base dart of each polygon."""
    total = sum(2 * len(p) for p in polygons)
    a0 = [-1] * total
    a1 = [-1] * total
    a2 = [-1] * total
    bases: List[int] = []
    occurrences: Dict[Hashable, List[Tuple[int, bool]]] = {}
    base = 0
    for p, polygon in enumerate(polygons):
        k = len(polygon)
        if k == 0:
            raise MalformedMap(f"polygon {p} has no sides")
        bases.append(base)
        for i, side in enumerate(polygon):
            start = base + 2 * i
            a0[start], a0[start + 1] = start + 1, start
            nxt = base + 2 * ((i + 1) % k)
            a1[start + 1], a1[nxt] = nxt, start + 1
            occurrences.setdefault(side.key, []).append((start, bool(side.forward)))
        base += 2 * k
    for key, occ in occurrences.items():
        if len(occ) != 2:
            raise MalformedMap(f"edge key {key!r} is used by {len(occ)} sides, expected 2")
        (s, fs), (t, ft) = occ
        if fs == ft:
            pairs = ((s, t), (s + 1, t + 1))
        else:
            pairs = ((s, t + 1), (s + 1, t))
        for x, y in pairs:
            a2[x], a2[y] = y, x
    return build_gmap(total, a0, a1, a2), bases


def parse_word(word: str) -> List[Side]:
    """"a b a' b'" -> sides; a trailing quote reverses the side."""
    sides = []
    for token in word.split():
        if token.endswith("'"):
            sides.append(Side(token[:-1], False))
        else:
            sides.append(Side(token, True))
    return sides


def from_words(words: Sequence[str]) -> GMap:
    """One polygon per boundary word."""
    g, _ = glue_polygons([parse_word(w) for w in words])
    return g


def from_vertex_cycles(cycles: Sequence[Sequence[Hashable]]) -> GMap:
    """Faces given by their vertex cycles; edges are named by their end points."""
    polygons = []
    for cycle in cycles:
        sides = []
        for i, p in enumerate(cycle):
            q = cycle[(i + 1) % len(cycle)]
            a, b = sorted((p, q))
            sides.append(Side((a, b), p == a))
        polygons.append(sides)
    g, _ = glue_polygons(polygons)
    return g
