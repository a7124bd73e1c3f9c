"""
Local surgery on a mutable copy of the dart tables.

Used to undo subdivisions: deleting an edge merges its two faces, deleting the
star of a vertex merges every face around it, smoothing a degree-2 vertex
merges its two edges. `compact` renumbers the surviving darts and validates.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from tilesub.errors import MalformedMap
from tilesub.gmap.core import GMap, build_gmap
from tilesub.utils.helpers import orbit

logger = logging.getLogger(__name__)


class DartTable:
    def __init__(self, g: GMap):
        self.a0 = list(g.alpha0)
        self.a1 = list(g.alpha1)
        self.a2 = list(g.alpha2)
        self.alive = [True] * g.dart_count

    def vertex_darts(self, dart: int) -> List[int]:
        return orbit(dart, (self.a1, self.a2))

    def edge_darts(self, dart: int) -> List[int]:
        return orbit(dart, (self.a0, self.a2))

    def _kill(self, darts) -> None:
        for d in darts:
            if not self.alive[d]:
                raise MalformedMap(f"dart {d} removed twice")
            self.alive[d] = False

    def remove_edge(self, dart: int) -> None:
        """Delete an edge between two different corners of each end vertex."""
        removed = set(self.edge_darts(dart))
        for x in removed:
            y, z = self.a1[x], self.a1[self.a2[x]]
            if y in removed or z in removed:
                raise MalformedMap(f"edge of dart {dart} is a loop or ends at a degree-1 vertex")
            self.a1[y], self.a1[z] = z, y
        self._kill(removed)

    def remove_vertex_star(self, dart: int) -> None:
        """Delete a vertex together with all its incident edges."""
        center = set(self.vertex_darts(dart))
        removed = set()
        for x in center:
            removed.update(self.edge_darts(x))
        for y in removed - center:
            u, w = self.a1[y], self.a1[self.a2[y]]
            if u in removed or w in removed:
                raise MalformedMap(f"star of dart {dart} has adjacent spokes")
            self.a1[u], self.a1[w] = w, u
        self._kill(removed)

    def smooth_vertex(self, dart: int) -> None:
        """Erase a degree-2 vertex, joining its two edges into one."""
        darts = self.vertex_darts(dart)
        if len(darts) != 4:
            raise MalformedMap(f"vertex of dart {dart} has degree {len(darts) // 2}, expected 2")
        for x in darts:
            p, q = self.a0[x], self.a0[self.a1[x]]
            if p in darts or q in darts:
                raise MalformedMap(f"vertex of dart {dart} carries a loop")
            self.a0[p], self.a0[q] = q, p
        self._kill(darts)

    def compact(self) -> Tuple[GMap, List[Optional[int]]]:
        """Validated map on the surviving darts plus the old -> new numbering."""
        new_id: List[Optional[int]] = [None] * len(self.alive)
        survivors = [d for d, ok in enumerate(self.alive) if ok]
        for i, d in enumerate(survivors):
            new_id[d] = i
        tables = [[new_id[table[d]] for d in survivors] for table in (self.a0, self.a1, self.a2)]
        if any(x is None for t in tables for x in t):
            raise MalformedMap("surviving dart points at a removed dart")
        logger.debug("compacted %d darts to %d", len(self.alive), len(survivors))
        return build_gmap(len(survivors), *tables), new_id
