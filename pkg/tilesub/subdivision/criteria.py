"""
Surface-specific subdivisibility criteria and the bipartite test.

These are the closed-form theorems; `check_subdivisible` remains the
decision procedure and the test suite compares the two.
"""

from __future__ import annotations

import logging

import networkx as nx

from tilesub.gmap.core import GMap
from tilesub.gmap.surface import classify_surface
from tilesub.models.schemas import SubdivisionPrediction
from tilesub.subdivision.homology import homology_character, skeleton
from tilesub.tiling.quad import classify_all

logger = logging.getLogger(__name__)


def is_bipartite_skeleton(g: GMap) -> bool:
    graph = skeleton(g)
    if nx.number_of_selfloops(graph) > 0:
        return False
    return nx.is_bipartite(nx.Graph(graph))


def predict_subdivisible(g: GMap) -> SubdivisionPrediction:
    surface = classify_surface(g)
    tags = {c.tag for c in classify_all(g).values()}
    if None in tags:
        return SubdivisionPrediction(subdivisible=False, rule="forbidden_tile")
    if surface.word == "S2":
        return SubdivisionPrediction(subdivisible=True, rule="sphere")
    report = homology_character(g)
    if surface.word == "T2^1":
        if "Q13_24" in tags:
            return SubdivisionPrediction(subdivisible=True, rule="torus_q13_24")
        even = all(c.length_parity == 0 for c in report.basis)
        return SubdivisionPrediction(subdivisible=even, rule="torus_even_cycles")
    if surface.word == "P2^1":
        if tags & {"Q12", "Q123", "R"}:
            return SubdivisionPrediction(subdivisible=True, rule="projective_degenerate_tile")
        odd = all(c.length_parity == 1 for c in report.basis)
        return SubdivisionPrediction(subdivisible=odd, rule="projective_odd_cycle")
    if surface.orientable:
        return SubdivisionPrediction(subdivisible=is_bipartite_skeleton(g), rule="orientable_bipartite")
    return SubdivisionPrediction(subdivisible=report.all_lambda_zero, rule="homology_character")
