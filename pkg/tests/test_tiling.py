from __future__ import annotations

import pytest

from tilesub.catalogue.entries import ENTRIES
from tilesub.catalogue.registry import get, get_map
from tilesub.errors import Forbidden, NotPentTiling, NotQuadTiling, TilingError, UnknownCell
from tilesub.gmap.builder import from_words
from tilesub.models.schemas import VertexMark
from tilesub.subdivision.parity import check_subdivisible
from tilesub.subdivision.simple import filled_labeling, simple_pentagonal_subdivision
from tilesub.tiling.neighborhood import boundary_circles, self_glued_sides
from tilesub.tiling.pent import classify_pent_tile, dotted_side_candidate
from tilesub.tiling.quad import (
    TABLE, admissible_tiles, classify_all, classify_quad_tile, min_surface, require_admissible,
    table_row, tile_neighborhood_signature,
)
from tilesub.tiling.validate import require_pent_tiling, require_quad_tiling, require_tiling, validate_tiling
from tilesub.tiling.walks import face_boundary_word, face_walk, vertex_sequence


def _labels(name: str) -> list:
    return sorted(tile.label for tile in classify_all(get_map(name)).values())


# validation

def test_cube_is_a_quadrilateral_tiling():
    report = validate_tiling(get_map("cube"), 4)
    assert report.ok
    assert report.min_vertex_degree == 3
    assert report.face_size_histogram == {4: 6}
    assert report.violations == []


def test_triangles_fail_the_quadrilateral_check():
    report = validate_tiling(get_map("tetrahedron"), 4)
    assert not report.ok
    assert {v.kind for v in report.violations} == {"face_size"}
    assert len(report.violations) == 4
    with pytest.raises(NotQuadTiling):
        require_quad_tiling(get_map("tetrahedron"))
    require_tiling(get_map("tetrahedron"))


def test_low_degree_vertices_are_reported():
    # two squares glued along their boundary: every vertex has degree 2
    pillow = from_words(["a b c d", "d' c' b' a'"])
    report = validate_tiling(pillow)
    assert not report.ok
    assert report.min_vertex_degree == 2
    assert all(v.kind == "vertex_degree" and v.value == 2 for v in report.violations)
    with pytest.raises(TilingError):
        require_tiling(pillow)


def test_pentagonal_check():
    with pytest.raises(NotPentTiling):
        require_pent_tiling(get_map("cube"))


# boundary words

def test_face_boundary_word_lists_every_corner():
    cube = get_map("cube")
    for face in cube.faces:
        word = face_boundary_word(cube, face)
        assert word.face == face.id
        assert len(word.corners) == 4
        assert len({c.vertex for c in word.corners}) == 4
        assert len({c.edge for c in word.corners}) == 4


@pytest.mark.parametrize("dart", [-1, 48])
def test_face_walk_rejects_darts_outside_the_map(dart):
    with pytest.raises(UnknownCell):
        face_walk(get_map("cube"), dart)


def test_face_walk_starts_at_minimum_dart():
    cube = get_map("cube")
    for face in cube.faces:
        walk = face_walk(cube, face)
        assert walk.darts[0] == face.id
        assert walk.darts[1] == cube.alpha0[face.id]
        assert set(walk.darts) == face.darts


# quadrilateral tile classes

@pytest.mark.parametrize(
    "name",
    ["cube", "torus_2x2", "torus_3x3", "torus_qq", "klein_K", "r_pair", "r2_pair", "r1_pair", "sphere_q13", "p2_from_2gon", "hemicube"],
)
def test_catalogue_face_classes(name):
    entry = get(name)
    expected = sorted(
        label for label, count in entry.expected.face_classes.items() for _ in range(count)
    )
    assert _labels(name) == expected


WORD_ENTRIES = [name for name, data in ENTRIES.items() if "words" in data]


def _rotate(word: str, k: int) -> str:
    tokens = word.split()
    return " ".join(tokens[k:] + tokens[:k])


def _mirror(word: str) -> str:
    return " ".join(t[:-1] if t.endswith("'") else t + "'" for t in reversed(word.split()))


@pytest.mark.parametrize("name", WORD_ENTRIES)
@pytest.mark.parametrize("k", range(4))
@pytest.mark.parametrize("mirrored", [False, True])
def test_face_classes_do_not_depend_on_the_starting_corner(name, k, mirrored):
    words = [_mirror(w) if mirrored else w for w in ENTRIES[name]["words"]]
    g = from_words([_rotate(w, k) for w in words])
    expected = sorted(
        label for label, count in get(name).expected.face_classes.items() for _ in range(count)
    )
    assert sorted(tile.label for tile in classify_all(g).values()) == expected


def test_r_tile_with_wrapped_twisted_pair():
    g = from_words(["a b c a", "d d c b"])
    walk = face_walk(g, 0)
    assert self_glued_sides(g, walk) == [(0, 3, True)]
    assert classify_quad_tile(g, 0).tag == "R"
    assert tile_neighborhood_signature(g, 0) == table_row("R").signature()


def test_forbidden_adjacent_opposing_identification():
    g = from_words(["a a' b b"])
    result = classify_quad_tile(g, 0)
    assert not result.admissible
    assert result.reason == "adjacent_opposing_identification"
    assert result.label == "Forbidden:adjacent_opposing_identification"


def test_forbidden_opposite_edge_identification():
    g = from_words(["a b a' b'"])
    result = classify_quad_tile(g, 0)
    assert result.reason == "opposite_edge_identification"
    with pytest.raises(Forbidden) as info:
        require_admissible(g)
    assert info.value.face == 0
    with pytest.raises(Forbidden):
        tile_neighborhood_signature(g, 0)


def test_twisted_pairs_of_the_klein_tile():
    g = from_words(["a a b b"])
    pairs = self_glued_sides(g, face_walk(g, 0))
    assert pairs == [(0, 1, True), (2, 3, True)]
    assert classify_quad_tile(g, 0).tag == "K"


def test_signature_matches_table_row():
    for name in ("cube", "torus_qq", "klein_K", "r_pair", "r2_pair", "sphere_q13"):
        g = get_map(name)
        for fid, tile in classify_all(g).items():
            assert tile_neighborhood_signature(g, fid) == table_row(tile.tag).signature()


def test_q_tile_has_one_plain_circle():
    cube = get_map("cube")
    walk = face_walk(cube, cube.faces[0])
    assert boundary_circles(cube, walk) == [(4, 0)]


def test_table_covers_thirteen_classes():
    assert len(TABLE) == 13
    assert min_surface("K").rule == "exact"
    with pytest.raises(KeyError):
        min_surface("Q5")


@pytest.mark.parametrize(
    "word, tags",
    [
        ("S2", ["Q", "Q13"]),
        ("T2^1", ["Q", "Q13", "Q13_24"]),
        ("P2^1", ["Q", "Q12", "Q13", "Q123", "R"]),
    ],
)
def test_admissible_tiles(word, tags):
    assert admissible_tiles(word) == tags


def test_klein_bottle_admits_the_k_tile():
    assert "K" in admissible_tiles("P2^2")
    assert "K" not in admissible_tiles("P2^3")
    assert "R1" in admissible_tiles("P2^2")


def test_every_catalogue_tile_fits_its_surface():
    for name in ("cube", "torus_2x2", "torus_qq", "klein_K", "sphere_q13", "r_pair", "r2_pair", "hemicube"):
        entry = get(name)
        allowed = admissible_tiles(entry.expected.surface)
        assert all(tile.tag in allowed for tile in classify_all(entry.map).values())


# pentagon types

def test_dotted_side_candidate():
    F = VertexMark.FILLED
    assert dotted_side_candidate([None, None, F, None, F]) == 0
    assert dotted_side_candidate([F, None, F, None, None]) == 3
    assert dotted_side_candidate([F, F, None, None, None]) is None
    assert dotted_side_candidate([None] * 5) is None


def test_simple_subdivision_of_the_cube_has_p1_tiles():
    cube = get_map("cube")
    g, provenance = simple_pentagonal_subdivision(cube, check_subdivisible(cube))
    labeling = filled_labeling(provenance)
    assert len(labeling) == 8
    for face in g.faces:
        tile = classify_pent_tile(g, face.id, labeling)
        assert tile.tag == "P1"
        assert tile.dotted_side is not None


def test_simple_subdivision_of_the_klein_tile_has_p3_tiles():
    k = get_map("klein_K")
    g, provenance = simple_pentagonal_subdivision(k, check_subdivisible(k))
    labeling = filled_labeling(provenance)
    assert {classify_pent_tile(g, f.id, labeling).tag for f in g.faces} == {"P3"}


def test_hollow_marks_do_not_fit_a_pentagon():
    cube = get_map("cube")
    g, provenance = simple_pentagonal_subdivision(cube, check_subdivisible(cube))
    face = g.faces[0]
    labeling = {v: VertexMark.HOLLOW for v in vertex_sequence(g, face_walk(g, face))}
    assert classify_pent_tile(g, face.id, labeling).reason == "hollow_vertex"
