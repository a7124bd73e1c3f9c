"""
Face walks.

The internal walk of a face starts at its minimum dart and takes alpha0
first: positions p0, p1, ... with side i = (p[2i], p[2i+1]) and corner j
= (p[2j-1], p[2j]) sitting at the vertex of p[2j]. A side is forward when its
start dart lies on the reference end {e, alpha2(e)} of its edge e.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple, Union

from tilesub.gmap.core import FACE, Cell, GMap
from tilesub.errors import UnknownCell
from tilesub.models.schemas import BoundaryWalk, Corner

FaceRef = Union[Cell, int]


def face_id(face: FaceRef) -> int:
    return face.id if isinstance(face, Cell) else int(face)


@dataclass(frozen=True)
class FaceWalk:
    face: int
    darts: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts) // 2

    def side(self, i: int) -> Tuple[int, int]:
        i %= self.size
        return self.darts[2 * i], self.darts[2 * i + 1]

    def corner(self, j: int) -> Tuple[int, int]:
        j %= self.size
        return self.darts[2 * j - 1], self.darts[2 * j]

    def corner_dart(self, j: int) -> int:
        return self.darts[2 * (j % self.size)]

    def position(self, dart: int) -> int:
        return self.darts.index(dart)


def walk_from(g: GMap, start: int) -> Tuple[int, ...]:
    """Alternate alpha0, alpha1 from start until the face closes."""
    darts = [start]
    d = start
    step = 0
    while True:
        d = g.alpha0[d] if step % 2 == 0 else g.alpha1[d]
        step += 1
        if d == start:
            break
        darts.append(d)
    return tuple(darts)


def resolve_face(g: GMap, face: FaceRef) -> int:
    """Face id of a cell or of any dart in it."""
    dart = face_id(face)
    if not 0 <= dart < g.dart_count:
        raise UnknownCell(FACE, dart)
    return g.face_of(dart)


def face_walk(g: GMap, face: FaceRef) -> FaceWalk:
    fid = resolve_face(g, face)
    return FaceWalk(fid, walk_from(g, fid))


def side_forward(g: GMap, start: int) -> bool:
    e = g.edge_of(start)
    return start == e or start == g.alpha2[e]


def vertex_sequence(g: GMap, walk: FaceWalk) -> List[int]:
    return [g.vertex_of(walk.corner_dart(j)) for j in range(walk.size)]


def edge_sequence(g: GMap, walk: FaceWalk) -> List[int]:
    return [g.edge_of(walk.side(i)[0]) for i in range(walk.size)]


def face_boundary_word(g: GMap, face: FaceRef) -> BoundaryWalk:
    """Walk from the minimum dart in the direction whose second dart is smaller."""
    fid = resolve_face(g, face)
    if g.alpha0[fid] < g.alpha1[fid]:
        walk = walk_from(g, fid)
        starts = walk[0::2]
    else:
        # corner first: take alpha1, then sides run (w[2j+1], w[2j+2])
        walk = [fid]
        d = fid
        step = 0
        while True:
            d = g.alpha1[d] if step % 2 == 0 else g.alpha0[d]
            step += 1
            if d == fid:
                break
            walk.append(d)
        starts = walk[1::2]
    corners = [
        Corner(vertex=g.vertex_of(s), edge=g.edge_of(s), forward=side_forward(g, s))
        for s in starts
    ]
    return BoundaryWalk(face=fid, corners=corners)


def face_ids(g: GMap) -> List[int]:
    return [f.id for f in g.cells(FACE)]


def face_walks(g: GMap) -> dict:
    return {f.id: face_walk(g, f.id) for f in g.cells(FACE)}


def side_locations(g: GMap, walks: dict) -> dict:
    """dart -> (face id, side index) for every dart."""
    where = {}
    for fid, walk in walks.items():
        for p, d in enumerate(walk.darts):
            where[d] = (fid, p // 2)
    return where
