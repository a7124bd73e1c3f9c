"""
Isomorphism testing and canonical forms by anchored propagation.

For a connected map, fixing the image of one dart fixes the image of every
dart, so trying every anchor is exhaustive.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from tilesub.errors import Disconnected
from tilesub.gmap.core import GMap, connected_components, is_connected, relabel

logger = logging.getLogger(__name__)


def _propagate(a: GMap, b: GMap, x0: int, y0: int, taken: set) -> Optional[Dict[int, int]]:
    phi = {x0: y0}
    used = {y0}
    if y0 in taken:
        return None
    stack = [x0]
    while stack:
        x = stack.pop()
        y = phi[x]
        for ai, bi in zip(a.alphas, b.alphas):
            u, v = ai[x], bi[y]
            if u in phi:
                if phi[u] != v:
                    return None
            elif v in used or v in taken:
                return None
            else:
                phi[u] = v
                used.add(v)
                stack.append(u)
    return phi


def _invariants(g: GMap) -> Tuple[int, ...]:
    return (
        g.dart_count,
        len(g.vertices),
        len(g.edges),
        len(g.faces),
        *sorted(g.degrees.values()),
    )


def are_isomorphic(a: GMap, b: GMap) -> Optional[Dict[int, int]]:
    """A dart bijection commuting with every alpha_i, or None."""
    if _invariants(a) != _invariants(b):
        return None
    if a.dart_count == 0:
        return {}
    comps_b = connected_components(b)
    taken: set = set()
    phi: Dict[int, int] = {}
    for comp in connected_components(a):
        x0 = comp[0]
        match = None
        for other in comps_b:
            if len(other) != len(comp) or other[0] in taken:
                continue
            for y0 in other:
                match = _propagate(a, b, x0, y0, taken)
                if match is not None:
                    break
            if match is not None:
                break
        if match is None:
            return None
        phi.update(match)
        taken.update(match.values())
    return phi


def _labeling(g: GMap, anchor: int, best: Optional[Tuple[List[int], List[int], List[int]]]):
    """BFS labeling from anchor, or None when its alpha0 row loses to best."""
    n = g.dart_count
    a0, a1, a2 = g.alphas
    label = [-1] * n
    label[anchor] = 0
    order = [anchor]
    rows: Tuple[List[int], List[int], List[int]] = ([], [], [])
    ahead = best is None
    for position in range(n):
        x = order[position]
        for i, alpha in enumerate((a0, a1, a2)):
            y = alpha[x]
            if label[y] == -1:
                label[y] = len(order)
                order.append(y)
            rows[i].append(label[y])
        if not ahead:
            mine, theirs = rows[0][position], best[0][position]
            if mine > theirs:
                return None
            if mine < theirs:
                ahead = True
    if not ahead and (rows[1], rows[2]) >= (best[1], best[2]):
        return None
    return rows, label


def canonical_form_with_perm(g: GMap) -> Tuple[GMap, List[int]]:
    """Canonical map plus the old -> new dart numbering."""
    if not is_connected(g):
        raise Disconnected("canonical form requires a connected map")
    best_rows = None
    best_label: List[int] = []
    for anchor in range(g.dart_count):
        found = _labeling(g, anchor, best_rows)
        if found is not None:
            best_rows, best_label = found
    logger.debug("canonical form over %d anchors", g.dart_count)
    return relabel(g, best_label), best_label


def canonical_form(g: GMap) -> GMap:
    return canonical_form_with_perm(g)[0]


def canonical_key(g: GMap) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    c = canonical_form(g)
    return (c.alpha0, c.alpha1, c.alpha2)


def transport_labels(labels: Dict[int, object], perm: List[int], target: GMap, dimension: int) -> Dict[int, object]:
    """Re-key cell labels after renaming darts by perm."""
    return {target.cell_id(dimension, perm[cid]): value for cid, value in labels.items()}


def canonicalize_with_labels(g: GMap, **labels: Dict[int, object]) -> Tuple[GMap, Dict[str, Dict[int, object]]]:
    """Canonical map with vertex labels (any keyword but `assignment`) and face assignment re-keyed."""
    canon, perm = canonical_form_with_perm(g)
    moved = {}
    for name, mapping in labels.items():
        if mapping is None:
            continue
        dimension = 2 if name == "assignment" else 0
        moved[name] = transport_labels(mapping, perm, canon, dimension)
    return canon, moved
