from __future__ import annotations

import json

import pytest

from tilesub.catalogue.registry import get_map
from tilesub.errors import (
    Alpha02NotFree, Disconnected, DocumentError, FixedPoint, MalformedMap, NotInvolution,
)
from tilesub.gmap.builder import Side, from_vertex_cycles, from_words, glue_polygons, parse_word
from tilesub.gmap.core import (
    EDGE, FACE, VERTEX, GMap, build_gmap, cell_of, cells, connected_components, disjoint_union,
    dual_map, is_connected, relabel, vertex_degree,
)
from tilesub.gmap.isomorphism import are_isomorphic, canonical_form, canonicalize_with_labels
from tilesub.gmap.serialization import dump_map, load_document, to_document
from tilesub.gmap.surface import (
    classify_surface, euler_characteristic, is_orientable, orientation, parse_surface_word, surface_word,
)
from tilesub.gmap.surgery import DartTable
from tilesub.models.schemas import VertexMark


def _reversed(g: GMap) -> GMap:
    return relabel(g, list(reversed(range(g.dart_count))))


# build_gmap validation

def test_build_gmap_rejects_wrong_length():
    with pytest.raises(MalformedMap):
        build_gmap(4, [1, 0, 3], [3, 2, 1, 0], [2, 3, 0, 1])


def test_build_gmap_rejects_out_of_range():
    with pytest.raises(MalformedMap):
        build_gmap(2, [1, 5], [1, 0], [1, 0])


def test_build_gmap_rejects_fixed_point():
    with pytest.raises(FixedPoint) as info:
        build_gmap(2, [0, 1], [1, 0], [1, 0])
    assert info.value.i == 0
    assert info.value.dart == 0


def test_build_gmap_rejects_non_involution():
    with pytest.raises(NotInvolution) as info:
        build_gmap(3, [1, 2, 0], [1, 0, 1], [1, 0, 1])
    assert info.value.i == 0


def test_build_gmap_rejects_alpha0_alpha2_not_free():
    # alpha2 == alpha0 makes alpha0 o alpha2 the identity
    with pytest.raises(Alpha02NotFree):
        build_gmap(4, [1, 0, 3, 2], [3, 2, 1, 0], [1, 0, 3, 2])


# cells and surfaces

def test_cube_cells():
    cube = get_map("cube")
    assert len(cells(cube, VERTEX)) == 8
    assert len(cells(cube, EDGE)) == 12
    assert len(cells(cube, FACE)) == 6
    assert all(e.size == 4 for e in cube.edges)
    assert all(vertex_degree(cube, v.id) == 3 for v in cube.vertices)
    assert all(cube.face_size(f.id) == 4 for f in cube.faces)


def test_cells_are_named_by_minimum_dart():
    cube = get_map("cube")
    for dim in (VERTEX, EDGE, FACE):
        for c in cube.cells(dim):
            assert c.id == min(c.darts)
            assert cell_of(cube, dim, max(c.darts)) == c


@pytest.mark.parametrize(
    "name, orientable, euler, word",
    [
        ("cube", True, 2, "S2"),
        ("torus_2x2", True, 0, "T2^1"),
        ("torus_qq", True, 0, "T2^1"),
        ("klein_K", False, 0, "P2^2"),
        ("hemicube", False, 1, "P2^1"),
        ("icosahedron", True, 2, "S2"),
    ],
)
def test_classify_surface(name, orientable, euler, word):
    signature = classify_surface(get_map(name))
    assert signature.orientable is orientable
    assert signature.euler == euler
    assert signature.word == word


def test_orientation_colors_alternate():
    cube = get_map("cube")
    color = orientation(cube)
    assert color is not None
    assert color[0] == 0
    for alpha in cube.alphas:
        assert all(color[d] != color[alpha[d]] for d in range(cube.dart_count))


def test_klein_bottle_is_not_orientable():
    assert orientation(get_map("klein_K")) is None
    assert not is_orientable(get_map("klein_K"))


def test_surface_words_round_trip():
    assert surface_word(True, -2) == "T2^2"
    assert surface_word(False, -1) == "P2^3"
    assert parse_surface_word("T2") == (True, 0)
    assert parse_surface_word("P2^2") == (False, 0)
    assert parse_surface_word("S2") == (True, 2)


def test_empty_map_is_disconnected():
    empty = build_gmap(0, [], [], [])
    assert not is_connected(empty)
    with pytest.raises(Disconnected):
        classify_surface(empty)


def test_disjoint_union_has_two_components():
    cube = get_map("cube")
    both = disjoint_union(cube, cube)
    assert len(connected_components(both)) == 2
    with pytest.raises(Disconnected):
        classify_surface(both)
    with pytest.raises(Disconnected):
        canonical_form(both)


# isomorphism and canonical forms

def test_relabeled_maps_are_isomorphic():
    for name in ("cube", "klein_K", "sphere_q13"):
        g = get_map(name)
        phi = are_isomorphic(g, _reversed(g))
        assert phi is not None
        h = _reversed(g)
        for alpha_g, alpha_h in zip(g.alphas, h.alphas):
            assert all(phi[alpha_g[d]] == alpha_h[phi[d]] for d in range(g.dart_count))


def test_different_maps_are_not_isomorphic():
    assert are_isomorphic(get_map("cube"), get_map("torus_2x2")) is None
    assert are_isomorphic(get_map("r_pair"), get_map("r2_pair")) is None


def test_canonical_form_is_invariant():
    for name in ("cube", "torus_qq", "hemicube", "tetrahedron"):
        g = get_map(name)
        assert canonical_form(_reversed(g)) == canonical_form(g)
        assert canonical_form(canonical_form(g)) == canonical_form(g)


def test_labels_follow_canonicalization():
    cube = get_map("cube")
    h = _reversed(cube)
    marks = {h.vertex_of(0): VertexMark.FILLED}
    canon, moved = canonicalize_with_labels(h, vertex_marks=marks)
    assert canon == canonical_form(cube)
    assert list(moved["vertex_marks"].values()) == [VertexMark.FILLED]
    assert set(moved["vertex_marks"]) <= {v.id for v in canon.vertices}


def test_dual_is_an_involution():
    cube = get_map("cube")
    assert dual_map(dual_map(cube)) == cube
    octahedron = dual_map(cube)
    assert len(octahedron.vertices) == 6
    assert len(octahedron.faces) == 8
    assert are_isomorphic(dual_map(get_map("tetrahedron")), get_map("tetrahedron")) is not None


# builders

def test_parse_word():
    assert parse_word("a b' c") == [Side("a", True), Side("b", False), Side("c", True)]


def test_glue_polygons_rejects_unpaired_key():
    with pytest.raises(MalformedMap):
        glue_polygons([[Side("a"), Side("b"), Side("a"), Side("a")]])


def test_from_words_and_cycles_agree_on_the_torus():
    words = from_words(["a b a' b'"])
    assert classify_surface(words).word == "T2^1"
    assert len(words.vertices) == 1


def test_vertex_cycles_name_edges_by_endpoints():
    tetra = from_vertex_cycles([[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]])
    assert len(tetra.edges) == 6
    assert sorted(tetra.degrees.values()) == [3, 3, 3, 3]


# surgery

def test_remove_edge_merges_two_faces():
    cube = get_map("cube")
    table = DartTable(cube)
    table.remove_edge(cube.edges[0].id)
    g, new_id = table.compact()
    assert len(g.faces) == 5
    assert len(g.edges) == 11
    assert sorted(g.degrees.values()) == [2, 2, 3, 3, 3, 3, 3, 3]
    assert sum(x is None for x in new_id) == 4


def test_smoothing_keeps_the_euler_characteristic():
    cube = get_map("cube")
    table = DartTable(cube)
    table.remove_edge(cube.edges[0].id)
    for d in range(cube.dart_count):
        if table.alive[d] and len(table.vertex_darts(d)) == 4:
            table.smooth_vertex(d)
    g, _ = table.compact()
    assert len(g.faces) == 5
    assert len(g.vertices) == 6
    assert euler_characteristic(g) == 2


def test_remove_vertex_star_merges_the_faces_around_it():
    cube = get_map("cube")
    table = DartTable(cube)
    table.remove_vertex_star(cube.vertices[0].id)
    g, _ = table.compact()
    assert len(g.faces) == 4
    assert len(g.vertices) == 7
    assert euler_characteristic(g) == 2


def test_smooth_vertex_requires_degree_two():
    cube = get_map("cube")
    with pytest.raises(MalformedMap):
        DartTable(cube).smooth_vertex(0)


# serialization

def test_documents_are_canonical():
    cube = get_map("cube")
    assert dump_map(cube) == dump_map(_reversed(cube))
    doc = json.loads(dump_map(cube))
    assert doc["format"] == "gmap2-v1"
    assert doc["darts"] == 48


def test_load_document_round_trip_keeps_labels():
    cube = get_map("cube")
    marks = {cube.vertices[0].id: VertexMark.HOLLOW}
    text = json.dumps(to_document(cube, vertex_marks=marks))
    g, labels = load_document(text)
    assert g == canonical_form(cube)
    assert list(labels.vertex_marks.values()) == [VertexMark.HOLLOW]
    assert int(next(iter(labels.vertex_marks))) in {v.id for v in g.vertices}


def test_load_document_reports_position_of_bad_json():
    with pytest.raises(DocumentError) as info:
        load_document('{"format": "gmap2-v1",\n  "darts": }')
    assert info.value.position["line"] == 2


def test_load_document_rejects_other_formats():
    doc = to_document(get_map("cube"))
    doc["format"] = "gmap3"
    with pytest.raises(DocumentError):
        load_document(json.dumps(doc))


def test_load_document_rejects_labels_on_unknown_cells():
    doc = to_document(get_map("cube"))
    doc["labels"] = {"vertex_marks": {"999": "filled"}}
    with pytest.raises(DocumentError):
        load_document(json.dumps(doc))


def test_load_document_rejects_malformed_tables():
    doc = {"format": "gmap2-v1", "darts": 2, "alpha0": [0, 1], "alpha1": [1, 0], "alpha2": [1, 0]}
    with pytest.raises(FixedPoint):
        load_document(json.dumps(doc))
