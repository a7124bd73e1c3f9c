"""
Regular neighborhood of a closed tile.

The neighborhood is the tile together with a small disk around every vertex
the tile visits more than once. Its boundary circles are traced along the
exposed sides; at an identified vertex the trace turns around the disk until
it re-enters the tile, and such a passage is a decorated vertex.
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import List, Set, Tuple

import networkx as nx

from tilesub.gmap.core import GMap
from tilesub.tiling.walks import FaceWalk, edge_sequence, vertex_sequence
from tilesub.utils.helpers import orbit

logger = logging.getLogger(__name__)


def identified_vertices(g: GMap, walk: FaceWalk) -> Set[int]:
    counts = Counter(vertex_sequence(g, walk))
    return {v for v, c in counts.items() if c >= 2}


def self_glued_sides(g: GMap, walk: FaceWalk) -> List[Tuple[int, int, bool]]:
    """(i, j, twisted) for sides i < j of the face that are the same edge.

    Twisted means both sides run the same way along the edge.
    """
    index = {d: p for p, d in enumerate(walk.darts)}
    pairs = []
    for i in range(walk.size):
        partner = g.alpha2[walk.side(i)[0]]
        if partner in index:
            p = index[partner]
            j = p // 2
            if i < j:
                pairs.append((i, j, p % 2 == 0))
    return pairs


def tile_euler(g: GMap, walk: FaceWalk) -> int:
    return len(set(vertex_sequence(g, walk))) - len(set(edge_sequence(g, walk))) + 1


def boundary_circles(g: GMap, walk: FaceWalk) -> List[Tuple[int, int]]:
    tile = set(walk.darts)
    identified = identified_vertices(g, walk)
    exposed = [i for i in range(walk.size) if g.alpha2[walk.side(i)[0]] not in tile]
    side_of = {d: p // 2 for p, d in enumerate(walk.darts)}
    seen: Set[int] = set()
    circles = []
    limit = 4 * g.dart_count + 4
    for i in exposed:
        if i in seen:
            continue
        start = walk.side(i)[0]
        cur = start
        edges = decorated = 0
        while True:
            seen.add(side_of[cur])
            edges += 1
            end = g.alpha0[cur]
            if g.vertex_of(end) not in identified:
                nxt = g.alpha1[end]
            else:
                x = g.alpha2[end]
                for _ in range(limit):
                    y = g.alpha1[x]
                    if g.alpha2[y] in tile:
                        nxt = g.alpha2[y]
                        break
                    x = g.alpha2[y]
                else:
                    raise RuntimeError(f"boundary trace of face {walk.face} does not close")
                decorated += 1
            cur = nxt
            if cur == start or edges > limit:
                break
        circles.append((edges, decorated))
    return sorted(circles)


def neighborhood_orientable(g: GMap, walk: FaceWalk) -> bool:
    tile = set(walk.darts)
    region = set(tile)
    for v in identified_vertices(g, walk):
        region.update(orbit(v, (g.alpha1, g.alpha2)))
    graph = nx.Graph()
    graph.add_nodes_from(region)
    for d in region:
        if d in tile:
            graph.add_edge(d, g.alpha0[d])
        graph.add_edge(d, g.alpha1[d])
        if g.alpha2[d] in region:
            graph.add_edge(d, g.alpha2[d])
    return nx.is_bipartite(graph)
