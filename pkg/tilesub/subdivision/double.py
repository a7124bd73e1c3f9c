"""Double pentagonal subdivision: T(4) followed by simple pentagonal subdivision."""

from __future__ import annotations

import logging
from typing import Dict, Tuple

from tilesub.errors import NotOrientable
from tilesub.gmap.core import GMap
from tilesub.models.schemas import ParityWitness, Provenance
from tilesub.subdivision.parity import check_subdivisible
from tilesub.subdivision.quad import quadrilateral_subdivision
from tilesub.subdivision.simple import simple_pentagonal_subdivision

logger = logging.getLogger(__name__)


def double_pentagonal_subdivision(t: GMap) -> Tuple[GMap, Dict[int, Provenance]]:
    quads, _ = quadrilateral_subdivision(t)
    result = check_subdivisible(quads)
    if isinstance(result, ParityWitness):
        logger.info("T(4) is not subdivisible, witness of length %d", len(result.walk))
        raise NotOrientable(result)
    return simple_pentagonal_subdivision(quads, result)
