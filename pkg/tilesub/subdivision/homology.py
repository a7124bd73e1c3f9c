"""
Z/2 homology basis of the tiling's surface with length parity and
orientation character per cycle.

A spanning tree of the 1-skeleton and a spanning tree of the dual on the
remaining edges leave exactly 2 - euler edges; each closes a cycle with its
tree path. The orientation character is read off a dart path that follows
the cycle: every alpha step flips the local orientation, so the parity of a
closed dart path is the character.
"""

from __future__ import annotations

import logging
from typing import FrozenSet, List, Set, Tuple

import networkx as nx

from tilesub.errors import Disconnected
from tilesub.gmap.core import GMap, is_connected
from tilesub.models.schemas import HomologyCharacterReport, HomologyCycle
from tilesub.tiling.validate import require_quad_tiling

logger = logging.getLogger(__name__)


def skeleton(g: GMap) -> nx.MultiGraph:
    """1-skeleton keyed by edge id; loops and parallel edges are kept."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(v.id for v in g.vertices)
    for e in g.edges:
        graph.add_edge(g.vertex_of(e.id), g.vertex_of(g.alpha0[e.id]), key=e.id)
    return graph


def _leftover_edges(g: GMap, graph: nx.MultiGraph) -> Tuple[Set[int], List[int]]:
    tree = {key for _, _, key in nx.minimum_spanning_edges(graph, keys=True, data=False)}
    dual = nx.MultiGraph()
    dual.add_nodes_from(f.id for f in g.faces)
    for e in g.edges:
        if e.id not in tree:
            dual.add_edge(g.face_of(e.id), g.face_of(g.alpha2[e.id]), key=e.id)
    cotree = {key for _, _, key in nx.minimum_spanning_edges(dual, keys=True, data=False)}
    leftover = sorted(e.id for e in g.edges if e.id not in tree and e.id not in cotree)
    return tree, leftover


def _rotate_to(g: GMap, dart: int, targets: FrozenSet[int]) -> Tuple[int, int]:
    """Walk the vertex alternately by alpha1, alpha2 until a target dart."""
    steps = 0
    d = dart
    while d not in targets:
        d = g.alpha1[d] if steps % 2 == 0 else g.alpha2[d]
        steps += 1
        if steps > g.dart_count:
            raise RuntimeError(f"no target dart around the vertex of {dart}")
    return d, steps


def _orientation_character(g: GMap, traversals: List[FrozenSet[int]]) -> int:
    """Parity of a closed dart path running along the traversals in order.

    Each traversal is the pair of edge darts at its starting end.
    """
    x0 = min(traversals[0])
    cur = x0
    steps = 0
    for k in range(len(traversals)):
        cur = g.alpha0[cur]
        steps += 1
        cur, turned = _rotate_to(g, cur, traversals[(k + 1) % len(traversals)])
        steps += turned
    if cur != x0:
        steps += 1  # cross the edge to land on x0 itself
    return steps % 2


def _end_darts(g: GMap, edge: int, vertex: int) -> FrozenSet[int]:
    darts = (edge, g.alpha0[edge], g.alpha2[edge], g.alpha0[g.alpha2[edge]])
    return frozenset(d for d in darts if g.vertex_of(d) == vertex)


def homology_character(g: GMap) -> HomologyCharacterReport:
    require_quad_tiling(g)
    if not is_connected(g):
        raise Disconnected()
    graph = skeleton(g)
    tree_keys, leftover = _leftover_edges(g, graph)
    tree = nx.Graph()
    tree.add_nodes_from(graph.nodes)
    for u, v, key in graph.edges(keys=True):
        if key in tree_keys:
            tree.add_edge(u, v, key=key)
    basis = []
    for edge in leftover:
        u, v = g.vertex_of(edge), g.vertex_of(g.alpha0[edge])
        traversals = [frozenset((edge, g.alpha2[edge]))]
        edges = [edge]
        path = nx.shortest_path(tree, v, u)
        for p, q in zip(path, path[1:]):
            key = tree.edges[p, q]["key"]
            edges.append(key)
            traversals.append(_end_darts(g, key, p))
        w1 = _orientation_character(g, traversals)
        parity = len(edges) % 2
        basis.append(
            HomologyCycle(edges=edges, vertices=[u] + path[:-1] if u != v else [u],
                          length_parity=parity, w1=w1, lam=parity ^ w1)
        )
    logger.debug("homology basis of size %d", len(basis))
    return HomologyCharacterReport(basis=basis)
