"""
Labeling search shared by the recognizers.

Every face offers a short list of options. An option is a set of
requirements on cells: ("v", vertex) -> mark and ("e", edge) -> mark. A
labeling picks one option per face so that all requirements agree. Faces
with the fewest compatible options are expanded first.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Tuple

from tilesub.config.settings import RECOGNITION_SOLUTION_LIMIT
from tilesub.errors import Disconnected, MapError, NoLabeling, TilingError
from tilesub.gmap.core import GMap
from tilesub.gmap.surgery import DartTable
from tilesub.models.schemas import VertexMark

logger = logging.getLogger(__name__)

Requirements = Dict[Tuple[str, int], Hashable]

FILLED = VertexMark.FILLED
HOLLOW = VertexMark.HOLLOW


def merge_requirements(pairs: Iterable[Tuple[Tuple[str, int], Hashable]]) -> Optional[Requirements]:
    """None when two requirements on the same cell disagree."""
    merged: Requirements = {}
    for key, value in pairs:
        if merged.setdefault(key, value) != value:
            return None
    return merged


def degree_ok(g: GMap, requirements: Requirements) -> bool:
    """Unmarked vertices given as a degree ("deg", k) must have that degree."""
    for (kind, cell), value in requirements.items():
        if kind == "v" and isinstance(value, tuple) and g.degrees[cell] != value[1]:
            return False
    return True


class LabelSearch:
    def __init__(self, options: Dict[int, List[Requirements]]):
        self.options = options
        for face, choices in sorted(options.items()):
            if not choices:
                raise NoLabeling({"face": face, "reason": "no_candidate"})

    def _compatible(self, state: Requirements, face: int) -> List[Requirements]:
        return [
            option for option in self.options[face]
            if all(state.get(key, value) == value for key, value in option.items())
        ]

    def solutions(self) -> Iterator[Requirements]:
        yield from self._extend({}, set(self.options))

    def _extend(self, state: Requirements, open_faces: set) -> Iterator[Requirements]:
        if not open_faces:
            yield dict(state)
            return
        best_face, best = None, None
        for face in sorted(open_faces):
            choices = self._compatible(state, face)
            if best is None or len(choices) < len(best):
                best_face, best = face, choices
                if not choices:
                    return
        open_faces.remove(best_face)
        for option in best:
            added = [key for key in option if key not in state]
            state.update(option)
            yield from self._extend(state, open_faces)
            for key in added:
                del state[key]
        open_faces.add(best_face)


def vertex_marks(requirements: Requirements) -> Dict[int, VertexMark]:
    return {
        cell: value for (kind, cell), value in requirements.items()
        if kind == "v" and isinstance(value, VertexMark)
    }


def labeling_key(marks: Dict[int, VertexMark]) -> Tuple[Tuple[int, str], ...]:
    return tuple(sorted((v, m.value) for v, m in marks.items()))


def best_accepted(
    search: LabelSearch,
    accept: Callable[[Requirements], Optional[object]],
    limit: Optional[int] = None,
) -> Tuple[Requirements, object, int]:
    """Least accepted labeling, what `accept` built for it, and the accepted count.

    `accept` returns None to reject a candidate. Counting stops at `limit`.
    """
    limit = RECOGNITION_SOLUTION_LIMIT if limit is None else limit
    best = None
    count = 0
    candidates = 0
    for requirements in search.solutions():
        candidates += 1
        built = accept(requirements)
        if built is None:
            continue
        count += 1
        key = labeling_key(vertex_marks(requirements))
        if best is None or key < best[0]:
            best = (key, requirements, built)
        if count >= limit:
            logger.info("solution limit %d reached", limit)
            break
    if best is None:
        raise NoLabeling({"reason": "exhausted", "candidates": candidates})
    logger.debug("%d candidate labelings, %d accepted", candidates, count)
    return best[1], best[2], count


def smooth_all(table: DartTable) -> None:
    """Smooth every surviving degree-2 vertex."""
    for d in range(len(table.alive)):
        if table.alive[d] and len(table.vertex_darts(d)) == 4:
            table.smooth_vertex(d)


def merge_around(g: GMap, hollow: Iterable[int]) -> GMap:
    """Delete the stars of the hollow vertices, then smooth the degree-2 vertices."""
    table = DartTable(g)
    for v in sorted(hollow):
        table.remove_vertex_star(v)
    smooth_all(table)
    return table.compact()[0]


def rebuild_or_none(build: Callable[[], GMap]) -> Optional[GMap]:
    """Run a reconstruction; malformed intermediate maps count as a rejection."""
    try:
        return build()
    except (MapError, TilingError, Disconnected) as exc:
        logger.info("reconstruction rejected: %s", exc)
        return None
