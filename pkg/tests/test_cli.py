from __future__ import annotations

import json

import pytest

import tilesub.cli.main as cli_main
from tilesub.cli.main import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def _json(out: str):
    return json.loads(out.strip().splitlines()[-1])


def _save(capsys, tmp_path, name: str) -> str:
    path = tmp_path / f"{name}.json"
    code, _ = _run(capsys, "catalogue", "get", name, "-o", str(path))
    assert code == 0
    return str(path)


def test_catalogue_list(capsys):
    code, out = _run(capsys, "catalogue", "list")
    assert code == 0
    assert "cube" in _json(out)["names"]


def test_catalogue_get_is_byte_identical(capsys):
    _, first = _run(capsys, "catalogue", "get", "cube")
    _, second = _run(capsys, "catalogue", "get", "cube")
    assert first == second
    assert json.loads(first)["format"] == "gmap2-v1"


def test_unknown_catalogue_name_exits_2(capsys):
    code, out = _run(capsys, "catalogue", "get", "nope")
    assert code == 2
    assert _json(out)["error"] == "UnknownName"


def test_surface_and_validate(capsys, tmp_path):
    path = _save(capsys, tmp_path, "klein_K")
    code, out = _run(capsys, "surface", path)
    assert code == 0
    assert _json(out) == {"euler": 0, "orientable": False, "word": "P2^2"}
    code, out = _run(capsys, "validate", path, "--gon", "4")
    assert code == 0
    assert _json(out)["ok"] is True


def test_validate_reports_wrong_face_size(capsys, tmp_path):
    path = _save(capsys, tmp_path, "tetrahedron")
    code, out = _run(capsys, "validate", path, "--gon", "4")
    assert code == 1
    assert _json(out)["ok"] is False


def test_tiles(capsys, tmp_path):
    path = _save(capsys, tmp_path, "torus_qq")
    code, out = _run(capsys, "tiles", path)
    assert code == 0
    faces = _json(out)["faces"]
    assert {entry["class"] for entry in faces.values()} == {"Q13_24"}
    assert all(entry["min_surface"]["word"] == "T2^1" for entry in faces.values())


def test_subdividable_yes(capsys, tmp_path):
    path = _save(capsys, tmp_path, "cube")
    code, out = _run(capsys, "subdividable", path)
    assert code == 0
    payload = _json(out)
    assert payload["subdivisible"] is True
    assert len(payload["assignment"]) == 6
    assert payload["prediction"] == {"rule": "sphere", "subdivisible": True}


def test_subdividable_no_with_witness(capsys, tmp_path):
    path = _save(capsys, tmp_path, "torus_3x3")
    code, out = _run(capsys, "subdividable", path, "--witness")
    assert code == 1
    payload = _json(out)
    assert payload["subdivisible"] is False
    assert payload["witness"][0] == payload["witness"][-1]


def test_malformed_document_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"format": "gmap2-v1", "darts": ', encoding="utf-8")
    code, out = _run(capsys, "surface", str(path))
    assert code == 2
    payload = _json(out)
    assert payload["error"] == "DocumentError"
    assert payload["position"]["line"] == 1


def test_missing_file_exits_2(capsys, tmp_path):
    code, out = _run(capsys, "surface", str(tmp_path / "missing.json"))
    assert code == 2
    assert _json(out)["error"] == "DocumentError"


def test_bad_subcommand_exits_2(capsys):
    code, _ = _run(capsys, "frobnicate")
    assert code == 2


def test_subdivide_then_recognize(capsys, tmp_path):
    cube = _save(capsys, tmp_path, "cube")
    pent = tmp_path / "pent.json"
    code, _ = _run(capsys, "subdivide", cube, "--op", "pent", "-o", str(pent))
    assert code == 0
    document = json.loads(pent.read_text(encoding="utf-8"))
    assert set(document["labels"]["vertex_marks"].values()) == {"filled", "hollow"}
    code, out = _run(capsys, "recognize", str(pent), "--mode", "ps")
    assert code == 0
    payload = _json(out)
    assert payload["mode"] == "ps"
    assert payload["base"]["format"] == "gmap2-v1"
    assert payload["base"]["darts"] == 48


def test_simple_subdivision_round_trip(capsys, tmp_path):
    cube = _save(capsys, tmp_path, "cube")
    sps = tmp_path / "sps.json"
    code, _ = _run(capsys, "subdivide", cube, "--op", "simple", "-o", str(sps))
    assert code == 0
    provenance = json.loads(sps.read_text(encoding="utf-8"))["labels"]["provenance"]
    assert sorted(set(provenance.values())) == ["midpoint", "original"]
    code, out = _run(capsys, "recognize", str(sps), "--mode", "sps")
    assert code == 0
    assert set(_json(out)["tile_types"].values()) == {"P1"}


def test_simple_subdivision_of_odd_torus_exits_1(capsys, tmp_path):
    path = _save(capsys, tmp_path, "torus_3x3")
    code, out = _run(capsys, "subdivide", path, "--op", "simple")
    assert code == 1
    assert "witness" in _json(out)


def test_recognize_failure_exits_1(capsys, tmp_path):
    path = _save(capsys, tmp_path, "cube")
    code, out = _run(capsys, "recognize", path, "--mode", "qs")
    assert code == 1
    payload = _json(out)
    assert payload["error"] == "NoLabeling"
    assert payload["certificate"]["reason"] == "no_candidate"


def test_connect_sum(capsys, tmp_path):
    cube = _save(capsys, tmp_path, "cube")
    torus = _save(capsys, tmp_path, "torus_2x2")
    out_path = tmp_path / "sum.json"
    code, _ = _run(capsys, "connect-sum", cube, torus, "--face-a", "0", "--face-b", "0", "-o", str(out_path))
    assert code == 0
    code, out = _run(capsys, "surface", str(out_path))
    assert _json(out)["word"] == "T2^1"


def test_export_dot(capsys, tmp_path):
    path = _save(capsys, tmp_path, "cube")
    code, out = _run(capsys, "export", path)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "graph skeleton"
    assert sum(" -- " in line for line in lines) == 12
    assert sum(line.strip().startswith("v") and " -- " not in line for line in lines) == 8


def test_enumerate_prints_maps_then_census(capsys):
    code, out = _run(capsys, "enumerate", "--gon", "4", "--faces", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert _json(out)["census"]["total"] == 3
    assert all(json.loads(line)["format"] == "gmap2-v1" for line in lines[:-1])


def test_enumerate_census_only(capsys):
    code, out = _run(capsys, "enumerate", "--gon", "4", "--faces", "2", "--surface", "T2^1", "--census-only")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    assert set(_json(out)["census"]["by_surface"]) == {"T2^1"}


def test_enumerate_rejects_bad_gon(capsys):
    code, out = _run(capsys, "enumerate", "--gon", "6", "--faces", "2")
    assert code == 2
    assert _json(out)["error"] == "InvalidArguments"


def test_enumerate_streams_maps_before_the_census(capsys, monkeypatch):
    real_census = cli_main.census
    seen = []

    def fake_census(maps, gon):
        for _ in maps:
            seen.append(capsys.readouterr().out.count("gmap2-v1"))
        return real_census([], gon)

    monkeypatch.setattr(cli_main, "census", fake_census)
    code, _ = _run(capsys, "enumerate", "--gon", "4", "--faces", "1")
    assert code == 0
    assert seen == [1, 1, 1]


@pytest.mark.parametrize("face", ["999", "-1"])
def test_connect_sum_rejects_unknown_faces(capsys, tmp_path, face):
    cube = _save(capsys, tmp_path, "cube")
    code, out = _run(capsys, "connect-sum", cube, cube, "--face-a", face, "--face-b", "0")
    assert code == 2
    payload = _json(out)
    assert payload["error"] == "UnknownCell"
    assert payload["message"] == f"no 2-cell contains dart {face}"
