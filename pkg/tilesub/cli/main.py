"""
Command-line entry point.

Exit codes: 0 for success or a yes answer, 1 for a decided no (with a JSON
explanation on stdout), 2 for bad input or usage.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from tilesub.catalogue.registry import get as get_entry
from tilesub.catalogue.registry import names as catalogue_names
from tilesub.cli.io import emit, read_map, read_marks, to_dot, write_text
from tilesub.config.settings import DEFAULT_JOBS, LOG_LEVEL
from tilesub.enumerator.search import census, enumerate_tilings
from tilesub.errors import (
    NoLabeling, NoSubdivisibleAlignment, NotOrientable, TilesubError,
)
from tilesub.gmap.core import GMap
from tilesub.gmap.serialization import dump_map, to_document
from tilesub.gmap.surface import classify_surface
from tilesub.models.schemas import EnumSpec, ParityWitness
from tilesub.recognition.ps import recognize_one_circ, recognize_ps
from tilesub.recognition.qs import recognize_qs
from tilesub.recognition.sps import recognize_sps
from tilesub.subdivision.connected_sum import connected_sum, connected_sum_subdivisible
from tilesub.subdivision.criteria import predict_subdivisible
from tilesub.subdivision.double import double_pentagonal_subdivision
from tilesub.subdivision.parity import check_subdivisible, dual_assignment
from tilesub.subdivision.pent import pentagonal_subdivision
from tilesub.subdivision.quad import quadrilateral_subdivision
from tilesub.subdivision.refine import refine3
from tilesub.subdivision.simple import simple_pentagonal_subdivision
from tilesub.tiling.quad import classify_all, tile_neighborhood_signature, table_row
from tilesub.tiling.validate import validate_tiling
from tilesub.utils.helpers import string_keys

logger = logging.getLogger(__name__)

# Outcomes that answer the question asked with "no"
DECIDED_NO = (NoLabeling, NoSubdivisibleAlignment, NotOrientable)

RECOGNIZERS = {
    "sps": recognize_sps,
    "ps": recognize_ps,
    "one-circ": recognize_one_circ,
    "qs": recognize_qs,
}

Outcome = Tuple[int, Any]


def cmd_validate(args) -> Outcome:
    g, _ = read_map(args.file)
    report = validate_tiling(g, args.gon)
    return (0 if report.ok else 1), report.model_dump(mode="json")


def cmd_surface(args) -> Outcome:
    g, _ = read_map(args.file)
    return 0, classify_surface(g).model_dump(mode="json")


def cmd_tiles(args) -> Outcome:
    g, _ = read_map(args.file)
    faces = {}
    for fid, tile in classify_all(g).items():
        entry: Dict[str, Any] = {"class": tile.label}
        if tile.admissible:
            entry["signature"] = tile_neighborhood_signature(g, fid).model_dump(mode="json")
            entry["min_surface"] = table_row(tile.tag).min_surface.model_dump(mode="json")
        faces[str(fid)] = entry
    return 0, {"faces": faces}


def cmd_subdividable(args) -> Outcome:
    g, _ = read_map(args.file)
    result = check_subdivisible(g)
    prediction = predict_subdivisible(g).model_dump(mode="json")
    if isinstance(result, ParityWitness):
        payload = {"subdivisible": False, "prediction": prediction}
        if args.witness:
            payload["witness"] = result.walk
        return 1, payload
    return 0, {
        "subdivisible": True,
        "assignment": string_keys(result.choice),
        "prediction": prediction,
    }


def _subdivide(op: str, g) -> Tuple[Any, Dict[str, Any]]:
    if op in ("simple", "dual-simple"):
        result = check_subdivisible(g)
        if isinstance(result, ParityWitness):
            raise NotOrientable(result)
        if op == "dual-simple":
            result = dual_assignment(result)
        out, provenance = simple_pentagonal_subdivision(g, result)
        return out, {"provenance": provenance}
    if op == "refine3":
        return refine3(g), {}
    if op == "quad":
        out, marks = quadrilateral_subdivision(g)
        return out, {"vertex_marks": marks}
    if op == "pent":
        out, marks = pentagonal_subdivision(g)
        return out, {"vertex_marks": marks}
    out, provenance = double_pentagonal_subdivision(g)
    return out, {"provenance": provenance}


def cmd_subdivide(args) -> Outcome:
    g, _ = read_map(args.file)
    out, labels = _subdivide(args.op, g)
    write_text(dump_map(out, **labels), args.output)
    return 0, None


def cmd_connect_sum(args) -> Outcome:
    a, _ = read_map(args.a)
    b, _ = read_map(args.b)
    if args.alignment is None:
        out, alignment = connected_sum_subdivisible(a, args.face_a, b, args.face_b)
    else:
        out, alignment = connected_sum(a, args.face_a, b, args.face_b, args.alignment), args.alignment
    logger.info("connected sum with alignment %d", alignment)
    write_text(dump_map(out), args.output)
    return 0, None


def cmd_recognize(args) -> Outcome:
    g, _ = read_map(args.file)
    result = RECOGNIZERS[args.mode](g)
    payload = result.model_dump(mode="json", exclude={"base"}, exclude_none=True)
    payload["base"] = to_document(result.base)
    return 0, payload


def cmd_catalogue(args) -> Outcome:
    if args.action == "list":
        return 0, {"names": catalogue_names()}
    if args.name is None:
        raise TilesubError("catalogue get needs a NAME")
    entry = get_entry(args.name)
    write_text(dump_map(entry.map), args.output)
    return 0, None


def _printed(maps: Iterable[GMap], quiet: bool) -> Iterator[GMap]:
    for g in maps:
        if not quiet:
            print(dump_map(g), flush=True)
        yield g


def cmd_enumerate(args) -> Outcome:
    spec = EnumSpec(gon=args.gon, faces=args.faces, surface=args.surface, min_degree=args.min_degree)
    maps = _printed(enumerate_tilings(spec, jobs=args.jobs), quiet=args.census_only)
    return 0, {"census": census(maps, spec.gon).model_dump(mode="json")}


def cmd_export(args) -> Outcome:
    g, labels = read_map(args.file)
    write_text(to_dot(g, read_marks(labels)), args.output)
    return 0, None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tilesub", description="Subdivisions of tilings of closed surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check vertex degrees and face sizes")
    p.add_argument("file")
    p.add_argument("--gon", type=int, default=None)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("surface", help="classify the underlying surface")
    p.add_argument("file")
    p.set_defaults(handler=cmd_surface)

    p = sub.add_parser("tiles", help="classify every quadrilateral tile")
    p.add_argument("file")
    p.set_defaults(handler=cmd_tiles)

    p = sub.add_parser("subdividable", help="decide simple pentagonal subdivisibility")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(handler=cmd_subdividable)

    p = sub.add_parser("subdivide", help="apply a subdivision operator")
    p.add_argument("file")
    p.add_argument("--op", required=True, choices=["simple", "dual-simple", "refine3", "quad", "pent", "double"])
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_subdivide)

    p = sub.add_parser("connect-sum", help="connected sum along two Q tiles")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--face-a", type=int, required=True)
    p.add_argument("--face-b", type=int, required=True)
    p.add_argument("--alignment", type=int, choices=range(8))
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_connect_sum)

    p = sub.add_parser("recognize", help="invert a subdivision")
    p.add_argument("file")
    p.add_argument("--mode", required=True, choices=sorted(RECOGNIZERS))
    p.set_defaults(handler=cmd_recognize)

    p = sub.add_parser("catalogue", help="built-in tilings")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("name", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_catalogue)

    p = sub.add_parser("enumerate", help="generate small tilings")
    p.add_argument("--gon", type=int, required=True)
    p.add_argument("--faces", type=int, required=True)
    p.add_argument("--surface")
    p.add_argument("--min-degree", type=int, default=3)
    p.add_argument("--census-only", action="store_true")
    p.add_argument("--jobs", type=int, default=DEFAULT_JOBS)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("export", help="write the 1-skeleton")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_export)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=LOG_LEVEL, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler: Callable[[Any], Outcome] = args.handler
    try:
        code, payload = handler(args)
    except DECIDED_NO as exc:
        emit(exc.payload())
        return 1
    except TilesubError as exc:
        logger.error("%s", exc)
        emit(exc.payload())
        return 2
    except ValueError as exc:
        # pydantic validation of command arguments
        logger.error("%s", exc)
        emit({"error": "InvalidArguments", "message": str(exc)})
        return 2
    if payload is not None:
        emit(payload)
    return code
