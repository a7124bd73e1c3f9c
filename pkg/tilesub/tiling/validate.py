from __future__ import annotations

import logging
from collections import Counter
from typing import Optional

from tilesub.errors import NotPentTiling, NotQuadTiling, TilingError
from tilesub.gmap.core import GMap
from tilesub.models.schemas import TilingReport, Violation

logger = logging.getLogger(__name__)


def validate_tiling(g: GMap, required_gon: Optional[int] = None) -> TilingReport:
    """Degree and face-size checks; failures go in the report."""
    violations = []
    for v in g.vertices:
        deg = v.size // 2
        if deg < 3:
            violations.append(Violation(kind="vertex_degree", cell=v.id, value=deg))
    histogram = Counter(f.size // 2 for f in g.faces)
    for f in g.faces:
        size = f.size // 2
        if size < 3 or (required_gon is not None and size != required_gon):
            violations.append(Violation(kind="face_size", cell=f.id, value=size))
    min_degree = min((v.size // 2 for v in g.vertices), default=0)
    report = TilingReport(
        ok=not violations,
        min_vertex_degree=min_degree,
        face_size_histogram=dict(sorted(histogram.items())),
        violations=violations,
    )
    if violations:
        logger.debug("tiling has %d violations", len(violations))
    return report


def require_quad_tiling(g: GMap) -> None:
    if g.dart_count == 0 or not validate_tiling(g, 4).ok:
        raise NotQuadTiling()


def require_pent_tiling(g: GMap) -> None:
    if g.dart_count == 0 or not validate_tiling(g, 5).ok:
        raise NotPentTiling()


def require_tiling(g: GMap) -> None:
    if g.dart_count == 0 or not validate_tiling(g).ok:
        raise TilingError("map is not a tiling (degree >= 3, faces >= 3 sides)")
