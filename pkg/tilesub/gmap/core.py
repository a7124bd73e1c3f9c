"""
Closed 2-dimensional generalized maps.

A map is a set of darts 0..n-1 with three fixed-point-free involutions:
alpha0 reverses a side, alpha1 turns a corner inside a face, alpha2 crosses
an edge into the neighboring face. Cells are orbits:

    vertex  <alpha1, alpha2>
    edge    <alpha0, alpha2>   (always 4 darts)
    face    <alpha0, alpha1>   (2k darts for a k-gon)

Every cell is named by its minimum dart.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Sequence, Tuple

from tilesub.errors import Alpha02NotFree, FixedPoint, MalformedMap, NotInvolution

logger = logging.getLogger(__name__)

VERTEX = 0
EDGE = 1
FACE = 2

CELL_GENERATORS: Dict[int, Tuple[int, int]] = {VERTEX: (1, 2), EDGE: (0, 2), FACE: (0, 1)}


@dataclass(frozen=True)
class Cell:
    dimension: int
    id: int
    darts: FrozenSet[int]

    @property
    def size(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class GMap:
    dart_count: int
    alpha0: Tuple[int, ...]
    alpha1: Tuple[int, ...]
    alpha2: Tuple[int, ...]

    @property
    def alphas(self) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
        return (self.alpha0, self.alpha1, self.alpha2)

    def alpha(self, i: int, dart: int) -> int:
        return self.alphas[i][dart]

    @cached_property
    def _cell_ids(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self._orbit_ids(CELL_GENERATORS[dim]) for dim in (VERTEX, EDGE, FACE))

    @cached_property
    def _cells(self) -> Tuple[Tuple[Cell, ...], ...]:
        result = []
        for dim in (VERTEX, EDGE, FACE):
            members: Dict[int, List[int]] = {}
            for d, cid in enumerate(self._cell_ids[dim]):
                members.setdefault(cid, []).append(d)
            result.append(tuple(Cell(dim, cid, frozenset(ds)) for cid, ds in sorted(members.items())))
        return tuple(result)

    def _orbit_ids(self, generators: Tuple[int, int]) -> Tuple[int, ...]:
        perms = [self.alphas[i] for i in generators]
        ids = [-1] * self.dart_count
        for start in range(self.dart_count):
            if ids[start] != -1:
                continue
            # start is the smallest unvisited dart, hence the orbit minimum
            ids[start] = start
            queue = deque([start])
            while queue:
                d = queue.popleft()
                for perm in perms:
                    e = perm[d]
                    if ids[e] == -1:
                        ids[e] = start
                        queue.append(e)
        return tuple(ids)

    def cell_id(self, dimension: int, dart: int) -> int:
        return self._cell_ids[dimension][dart]

    def vertex_of(self, dart: int) -> int:
        return self._cell_ids[VERTEX][dart]

    def edge_of(self, dart: int) -> int:
        return self._cell_ids[EDGE][dart]

    def face_of(self, dart: int) -> int:
        return self._cell_ids[FACE][dart]

    def cells(self, dimension: int) -> Tuple[Cell, ...]:
        return self._cells[dimension]

    @cached_property
    def _cell_index(self) -> Dict[Tuple[int, int], Cell]:
        return {(c.dimension, c.id): c for dim in self._cells for c in dim}

    def cell(self, dimension: int, cell_id: int) -> Cell:
        try:
            return self._cell_index[(dimension, cell_id)]
        except KeyError:
            raise KeyError(f"no {dimension}-cell with id {cell_id}") from None

    @property
    def vertices(self) -> Tuple[Cell, ...]:
        return self._cells[VERTEX]

    @property
    def edges(self) -> Tuple[Cell, ...]:
        return self._cells[EDGE]

    @property
    def faces(self) -> Tuple[Cell, ...]:
        return self._cells[FACE]

    def degree(self, vertex_id: int) -> int:
        return self.cell(VERTEX, vertex_id).size // 2

    def face_size(self, face_id: int) -> int:
        return self.cell(FACE, face_id).size // 2

    @cached_property
    def degrees(self) -> Dict[int, int]:
        return {v.id: v.size // 2 for v in self.vertices}


def build_gmap(
    dart_count: int,
    alpha0: Sequence[int],
    alpha1: Sequence[int],
    alpha2: Sequence[int],
) -> GMap:
    """Validate the dart tables and return an immutable map."""
    if dart_count < 0:
        raise MalformedMap(f"negative dart count {dart_count}")
    tables = [tuple(int(x) for x in a) for a in (alpha0, alpha1, alpha2)]
    for i, table in enumerate(tables):
        if len(table) != dart_count:
            raise MalformedMap(f"alpha{i} has length {len(table)}, expected {dart_count}")
        for d, e in enumerate(table):
            if not 0 <= e < dart_count:
                raise MalformedMap(f"alpha{i}({d}) = {e} is out of range")
    for i, table in enumerate(tables):
        for d in range(dart_count):
            if table[d] == d:
                raise FixedPoint(i, d)
    for i, table in enumerate(tables):
        for d in range(dart_count):
            if table[table[d]] != d:
                raise NotInvolution(i, d)
    a0, _, a2 = tables
    for d in range(dart_count):
        if a0[a2[d]] != a2[a0[d]] or a0[a2[d]] == d:
            raise Alpha02NotFree(d)
    return GMap(dart_count, tables[0], tables[1], tables[2])


def cells(g: GMap, dimension: int) -> List[Cell]:
    return list(g.cells(dimension))


def cell_of(g: GMap, dimension: int, dart: int) -> Cell:
    return g.cell(dimension, g.cell_id(dimension, dart))


def connected_components(g: GMap) -> List[List[int]]:
    """Dart sets of the connected components, ordered by minimum dart."""
    ids = g._orbit_ids((0, 1)) if g.dart_count else ()
    # faces are connected, so joining faces across alpha2 gives the components
    parent = {f: f for f in set(ids)}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d in range(g.dart_count):
        a, b = find(ids[d]), find(ids[g.alpha2[d]])
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: Dict[int, List[int]] = {}
    for d in range(g.dart_count):
        groups.setdefault(find(ids[d]), []).append(d)
    return [groups[k] for k in sorted(groups)]


def is_connected(g: GMap) -> bool:
    """The empty map has no surface and is treated as not connected."""
    return g.dart_count > 0 and len(connected_components(g)) == 1


def relabel(g: GMap, perm: Sequence[int]) -> GMap:
    """Rename dart d to perm[d]."""
    n = g.dart_count
    tables = [[0] * n for _ in range(3)]
    for i, alpha in enumerate(g.alphas):
        for d in range(n):
            tables[i][perm[d]] = perm[alpha[d]]
    return GMap(n, tuple(tables[0]), tuple(tables[1]), tuple(tables[2]))


def dual_map(g: GMap) -> GMap:
    """Exchange vertices and faces."""
    return GMap(g.dart_count, g.alpha2, g.alpha1, g.alpha0)


def disjoint_union(a: GMap, b: GMap) -> GMap:
    """b's darts are shifted by a.dart_count."""
    n = a.dart_count
    tables = [alpha_a + tuple(d + n for d in alpha_b) for alpha_a, alpha_b in zip(a.alphas, b.alphas)]
    return GMap(n + b.dart_count, *tables)


def vertex_degree(g: GMap, vertex_id: int) -> int:
    return g.degree(vertex_id)


def face_size(g: GMap, face_id: int) -> int:
    return g.face_size(face_id)
