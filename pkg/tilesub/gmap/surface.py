"""
Surface invariants: Euler characteristic, orientability, classification word.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import List, Optional, Tuple

from tilesub.errors import Disconnected
from tilesub.gmap.core import GMap, is_connected
from tilesub.models.schemas import SurfaceSignature

logger = logging.getLogger(__name__)


def euler_characteristic(g: GMap) -> int:
    return len(g.vertices) - len(g.edges) + len(g.faces)


def orientation(g: GMap) -> Optional[List[int]]:
    """2-coloring of the darts with every alpha_i joining opposite colors.

    Each component's minimum dart gets color 0. None when some component
    is not orientable.
    """
    color = [-1] * g.dart_count
    for start in range(g.dart_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            d = queue.popleft()
            for alpha in g.alphas:
                e = alpha[d]
                if color[e] == -1:
                    color[e] = 1 - color[d]
                    queue.append(e)
                elif color[e] == color[d]:
                    return None
    return color


def is_orientable(g: GMap) -> bool:
    return orientation(g) is not None


def surface_word(orientable: bool, euler: int) -> str:
    if orientable:
        if euler == 2:
            return "S2"
        return f"T2^{(2 - euler) // 2}"
    return f"P2^{2 - euler}"


def parse_surface_word(word: str) -> Tuple[bool, int]:
    """"S2" / "T2^k" / "P2^k" -> (orientable, euler). "T2" means T2^1."""
    text = word.strip().replace("²", "2")
    if text == "S2":
        return True, 2
    base, _, count = text.partition("^")
    try:
        k = int(count) if count else 1
    except ValueError:
        raise ValueError(f"bad surface word {word!r}") from None
    if k < 1:
        raise ValueError(f"bad surface word {word!r}")
    if base == "T2":
        return True, 2 - 2 * k
    if base == "P2":
        return False, 2 - k
    raise ValueError(f"bad surface word {word!r}")


def classify_surface(g: GMap) -> SurfaceSignature:
    if not is_connected(g):
        raise Disconnected("surface classification requires a connected map")
    orientable = is_orientable(g)
    euler = euler_characteristic(g)
    return SurfaceSignature(orientable=orientable, euler=euler, word=surface_word(orientable, euler))
