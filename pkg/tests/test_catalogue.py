from __future__ import annotations

import pytest

from tilesub.catalogue.registry import get, get_map, names, surface_tiling
from tilesub.errors import UnknownName
from tilesub.gmap.isomorphism import canonical_form
from tilesub.gmap.surface import classify_surface
from tilesub.subdivision.parity import is_subdivisible
from tilesub.tiling.quad import classify_all
from tilesub.tiling.validate import validate_tiling


def test_names_are_sorted():
    listed = names()
    assert listed == sorted(listed)
    assert {"cube", "klein_K", "torus_qq", "sphere_q13", "hemicube"} <= set(listed)


def test_unknown_name():
    with pytest.raises(UnknownName) as info:
        get("dodecahedron")
    assert info.value.known == names()


def test_entries_are_canonical():
    for name in names():
        g = get_map(name)
        assert canonical_form(g) == g


@pytest.mark.parametrize("name", names())
def test_expected_surface_and_face_count(name):
    entry = get(name)
    assert entry.name == name
    assert classify_surface(entry.map).word == entry.expected.surface
    assert len(entry.map.faces) == entry.expected.faces


@pytest.mark.parametrize("name", [n for n in names() if get(n).expected.subdivisible is not None])
def test_expected_subdivisibility(name):
    entry = get(name)
    assert is_subdivisible(entry.map) is entry.expected.subdivisible


def test_triangular_entries_have_no_quad_record():
    for name in ("tetrahedron", "icosahedron"):
        expected = get(name).expected
        assert expected.face_classes is None
        assert expected.subdivisible is None


def test_get_is_cached():
    assert get("cube") is get("cube")


@pytest.mark.parametrize("word", ["S2", "T2^1", "P2^1"])
def test_surface_tiling_small(word):
    g = surface_tiling(word)
    assert classify_surface(g).word == word
    assert is_subdivisible(g)
    if word != "P2^1":
        assert all(tile.tag == "Q" for tile in classify_all(g).values())


@pytest.mark.slow
@pytest.mark.parametrize("word", ["T2^2", "P2^2", "P2^3"])
def test_surface_tiling_sums(word):
    g = surface_tiling(word)
    assert classify_surface(g).word == word
    assert is_subdivisible(g)


def test_surface_tiling_rejects_bad_words():
    with pytest.raises(ValueError):
        surface_tiling("Z2")


@pytest.mark.parametrize("name", names())
def test_every_entry_is_a_tiling(name):
    report = validate_tiling(get_map(name))
    assert report.ok, report.violations
    assert report.min_vertex_degree >= 3
