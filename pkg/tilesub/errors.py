"""
Exception hierarchy for tilesub.

Every error carries its payload as attributes so callers (the CLI in
particular) can turn it into a JSON explanation.
"""

from typing import Any, Dict, List, Optional


class TilesubError(Exception):
    """Base class for all tilesub errors."""

    def payload(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": str(self)}


# Map construction errors

class MapError(TilesubError):
    """The dart tables do not describe a closed 2-gmap."""


class MalformedMap(MapError):
    pass


class FixedPoint(MapError):
    def __init__(self, i: int, dart: int):
        self.i = i
        self.dart = dart
        super().__init__(f"alpha{i} fixes dart {dart}")


class NotInvolution(MapError):
    def __init__(self, i: int, dart: int):
        self.i = i
        self.dart = dart
        super().__init__(f"alpha{i} is not an involution at dart {dart}")


class Alpha02NotFree(MapError):
    def __init__(self, dart: int):
        self.dart = dart
        super().__init__(f"alpha0 o alpha2 is not a fixed-point-free involution at dart {dart}")


class Disconnected(TilesubError):
    def __init__(self, message: str = "map is not connected"):
        super().__init__(message)


# Tiling-level errors

class TilingError(TilesubError):
    pass


class NotQuadTiling(TilingError):
    def __init__(self, message: str = "not a quadrilateral tiling"):
        super().__init__(message)


class NotPentTiling(TilingError):
    def __init__(self, message: str = "not a pentagonal tiling"):
        super().__init__(message)


class DegenerateTile(TilingError):
    def __init__(self, face: int):
        self.face = face
        super().__init__(f"face {face} is degenerate")

    def payload(self) -> Dict[str, Any]:
        return {**super().payload(), "face": self.face}


class TileNotNonDegenerate(TilingError):
    def __init__(self, face: int, tag: str):
        self.face = face
        self.tag = tag
        super().__init__(f"face {face} is {tag}, a non-degenerate Q tile is required")

    def payload(self) -> Dict[str, Any]:
        return {**super().payload(), "face": self.face, "tag": self.tag}


class Forbidden(TilingError):
    def __init__(self, reason: str, face: Optional[int] = None):
        self.reason = reason
        self.face = face
        super().__init__(f"forbidden tile ({reason})")

    def payload(self) -> Dict[str, Any]:
        return {**super().payload(), "reason": self.reason, "face": self.face}


# Subdivision errors

class AssignmentInvalid(TilesubError):
    def __init__(self, edge: int, message: str = ""):
        self.edge = edge
        super().__init__(message or f"edge {edge} midpoint is not used exactly once")


class NotOrientable(TilesubError):
    def __init__(self, witness: Optional[Any] = None):
        self.witness = witness
        super().__init__("surface is not orientable")

    def payload(self) -> Dict[str, Any]:
        data = super().payload()
        if self.witness is not None:
            data["witness"] = self.witness.model_dump()
        return data


class NoSubdivisibleAlignment(TilesubError):
    def __init__(self):
        super().__init__("no connected-sum alignment keeps the tiling subdivisible")


# Recognition errors

class NoLabeling(TilesubError):
    def __init__(self, certificate: Dict[str, Any]):
        self.certificate = certificate
        super().__init__(f"no valid labeling ({certificate})")

    def payload(self) -> Dict[str, Any]:
        return {**super().payload(), "certificate": self.certificate}


# Lookup and size errors

class UnknownName(TilesubError):
    def __init__(self, name: str, known: List[str]):
        self.name = name
        self.known = known
        super().__init__(f"unknown catalogue entry {name!r}")


class UnknownCell(TilesubError):
    def __init__(self, dimension: int, dart: int):
        self.dimension = dimension
        self.dart = dart
        super().__init__(f"no {dimension}-cell contains dart {dart}")


class CapExceeded(TilesubError):
    def __init__(self, faces: int, cap: int):
        self.faces = faces
        self.cap = cap
        super().__init__(f"{faces} faces exceeds the enumeration cap {cap}")


class TooLarge(TilesubError):
    def __init__(self, faces: int, limit: int):
        self.faces = faces
        self.limit = limit
        super().__init__(f"{faces} faces exceeds the brute-force limit {limit}")


class DocumentError(TilesubError):
    def __init__(self, message: str, position: Optional[Dict[str, int]] = None):
        self.position = position
        super().__init__(message)

    def payload(self) -> Dict[str, Any]:
        data = super().payload()
        if self.position is not None:
            data["position"] = self.position
        return data
