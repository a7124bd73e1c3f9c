"""
The subdivisibility decision as a parity constraint system.

Each face carries a bit: 0 joins the midpoints of pair A (sides 0 and 2 of
its walk, the pair holding the face's minimum dart), 1 joins pair B. Side s
of a face with bit b uses its midpoint iff b ^ inA(s). Every edge must
have exactly one used side, so for an edge with sides s in f and s' in f':

    b_f ^ b_f' = 1 ^ inA(s) ^ inA(s')
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Dict, List, Optional, Tuple, Union

from tilesub.errors import AssignmentInvalid, Disconnected
from tilesub.gmap.core import GMap, is_connected
from tilesub.models.schemas import ParityWitness, SubdivisionAssignment
from tilesub.tiling.validate import require_quad_tiling
from tilesub.tiling.walks import face_walks, side_locations

logger = logging.getLogger(__name__)


class ParityUnionFind:
    """Union-find where every element knows its parity relative to its root."""

    def __init__(self, elements):
        self.parent = {x: x for x in elements}
        self.parity = {x: 0 for x in elements}
        self.rank = {x: 0 for x in elements}

    def find(self, x) -> Tuple[object, int]:
        root, parity = x, 0
        while self.parent[root] != root:
            parity ^= self.parity[root]
            root = self.parent[root]
        # compress
        node, acc = x, parity
        while self.parent[node] != root and node != root:
            nxt, step = self.parent[node], self.parity[node]
            self.parent[node], self.parity[node] = root, acc
            acc ^= step
            node = nxt
        return root, parity

    def union(self, x, y, relation: int) -> bool:
        """Record parity(x) ^ parity(y) = relation; False on contradiction."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return (px ^ py) == relation
        if self.rank[rx] < self.rank[ry]:
            rx, ry, px, py = ry, rx, py, px
        elif self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        self.parent[ry] = rx
        self.parity[ry] = px ^ py ^ relation
        return True


def edge_constraints(g: GMap) -> List[Tuple[int, int, int, int]]:
    """(edge, face, face', relation) for every edge, ordered by edge id."""
    walks = face_walks(g)
    where = side_locations(g, walks)
    rows = []
    for e in g.edges:
        d = e.id
        f, s = where[d]
        f2, s2 = where[g.alpha2[d]]
        relation = 1 ^ (s % 2 == 0) ^ (s2 % 2 == 0)
        rows.append((e.id, f, f2, int(relation)))
    return rows


def _dual_path(graph: Dict[int, List[Tuple[int, int]]], source: int, target: int) -> List[int]:
    """Alternating face/edge walk from source to target over accepted constraints."""
    previous: Dict[int, Optional[Tuple[int, int]]] = {source: None}
    queue = deque([source])
    while queue:
        f = queue.popleft()
        if f == target:
            break
        for nxt, edge in graph.get(f, []):
            if nxt not in previous:
                previous[nxt] = (f, edge)
                queue.append(nxt)
    walk = [target]
    node = target
    while previous[node] is not None:
        f, edge = previous[node]
        walk.extend([edge, f])
        node = f
    walk.reverse()
    return walk


def check_subdivisible(g: GMap) -> Union[SubdivisionAssignment, ParityWitness]:
    require_quad_tiling(g)
    if not is_connected(g):
        raise Disconnected()
    faces = [f.id for f in g.faces]
    uf = ParityUnionFind(faces)
    accepted: Dict[int, List[Tuple[int, int]]] = {}
    for edge, f, f2, relation in edge_constraints(g):
        if not uf.union(f, f2, relation):
            if f == f2:
                walk = [f, edge, f]
            else:
                walk = _dual_path(accepted, f2, f) + [edge, f2]
            logger.debug("parity conflict at edge %d", edge)
            return ParityWitness(walk=walk)
        accepted.setdefault(f, []).append((f2, edge))
        accepted.setdefault(f2, []).append((f, edge))
    flip = uf.find(faces[0])[1]
    choice = {f: uf.find(f)[1] ^ flip for f in faces}
    return SubdivisionAssignment(choice=choice)


def is_subdivisible(g: GMap) -> bool:
    return isinstance(check_subdivisible(g), SubdivisionAssignment)


def verify_witness(g: GMap, witness: ParityWitness) -> bool:
    """Independent re-check: the walk is closed in the dual and its relations XOR to 1."""
    walk = witness.walk
    if len(walk) < 3 or len(walk) % 2 == 0 or walk[0] != walk[-1]:
        return False
    relations = {edge: (f, f2, rel) for edge, f, f2, rel in edge_constraints(g)}
    total = 0
    for k in range(0, len(walk) - 1, 2):
        f, edge, f2 = walk[k], walk[k + 1], walk[k + 2]
        if edge not in relations:
            return False
        a, b, rel = relations[edge]
        if {a, b} != {f, f2}:
            return False
        total ^= rel
    return total == 1


def used_sides(g: GMap, assignment: SubdivisionAssignment) -> Dict[int, int]:
    """Edge id -> number of its sides whose midpoint the assignment uses."""
    walks = face_walks(g)
    where = side_locations(g, walks)
    usage = {}
    for e in g.edges:
        count = 0
        for d in (e.id, g.alpha2[e.id]):
            f, s = where[d]
            count += assignment.choice[f] ^ (s % 2 == 0)
        usage[e.id] = count
    return usage


def validate_assignment(g: GMap, assignment: SubdivisionAssignment) -> None:
    if set(assignment.choice) != {f.id for f in g.faces}:
        raise AssignmentInvalid(-1, "assignment must give a bit for every face")
    for edge, count in used_sides(g, assignment).items():
        if count != 1:
            raise AssignmentInvalid(edge)


def dual_assignment(assignment: SubdivisionAssignment) -> SubdivisionAssignment:
    return SubdivisionAssignment(choice={f: 1 - b for f, b in assignment.choice.items()})


def count_subdivision_solutions(g: GMap) -> int:
    """Number of valid assignments: one free bit per connected component of the constraints."""
    if not isinstance(check_subdivisible(g), SubdivisionAssignment):
        return 0
    uf = ParityUnionFind([f.id for f in g.faces])
    for _, f, f2, relation in edge_constraints(g):
        uf.union(f, f2, relation)
    roots = {uf.find(f.id)[0] for f in g.faces}
    return 2 ** len(roots)
