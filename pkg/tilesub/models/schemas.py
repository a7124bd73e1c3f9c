from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator


class VertexMark(str, Enum):
    FILLED = "filled"
    HOLLOW = "hollow"


class Provenance(str, Enum):
    ORIGINAL = "original"
    MIDPOINT = "midpoint"
    CENTER = "center"


# Surface and tiling reports

class SurfaceSignature(BaseModel):
    orientable: bool
    euler: int
    word: str  # "S2", "T2^k" or "P2^k"


class Violation(BaseModel):
    kind: str  # "vertex_degree" or "face_size"
    cell: int
    value: int


class TilingReport(BaseModel):
    ok: bool
    min_vertex_degree: int
    face_size_histogram: Dict[int, int]
    violations: List[Violation] = []


class Corner(BaseModel):
    vertex: int
    edge: int
    forward: bool  # side runs along the edge's reference direction


class BoundaryWalk(BaseModel):
    face: int
    corners: List[Corner]


QUAD_TAGS = (
    "Q", "Q12", "Q13", "Q123", "Q132", "Q1234", "Q1243",
    "Q12_34", "Q13_24", "R", "R1", "R2", "K",
)


class TileClass(BaseModel):
    tag: Optional[str] = None
    reason: Optional[str] = None  # set when the tile is forbidden

    @model_validator(mode="after")
    def _tag_or_reason(self):
        if (self.tag is None) == (self.reason is None):
            raise ValueError("exactly one of tag and reason must be set")
        if self.tag is not None and self.tag not in QUAD_TAGS:
            raise ValueError(f"unknown tile tag {self.tag}")
        return self

    @property
    def admissible(self) -> bool:
        return self.tag is not None

    @property
    def label(self) -> str:
        return self.tag if self.tag is not None else f"Forbidden:{self.reason}"


class NbhdSignature(BaseModel):
    boundary_circles: List[Tuple[int, int]]  # sorted (edge_count, decorated_vertex_count)
    euler: int
    orientable: bool


class MinSurface(BaseModel):
    word: str
    rule: str  # "any", "torus_family", "nonorientable_at_least", "exact"
    description: str

    def admits(self, orientable: bool, euler: int) -> bool:
        """Whether a closed surface with this signature can carry the tile."""
        min_orientable = self.word == "S2" or self.word.startswith("T2")
        min_euler = 2 if self.word == "S2" else _word_euler(self.word)
        if self.rule == "exact":
            return not orientable and euler == min_euler
        if self.rule == "torus_family":
            return (orientable and euler <= 0) or (not orientable and euler <= -1)
        if self.rule == "nonorientable_at_least":
            return not orientable and euler <= min_euler
        # a connected sum with any surface
        if min_orientable:
            return euler <= min_euler if orientable else euler <= min_euler - 1
        return (not orientable) and euler <= min_euler


def _word_euler(word: str) -> int:
    if word == "S2":
        return 2
    base, _, count = word.partition("^")
    k = int(count or 1)
    return 2 - 2 * k if base == "T2" else 2 - k


class PentTileClass(BaseModel):
    tag: Optional[str] = None  # "P1", "P2" or "P3"
    reason: Optional[str] = None  # mismatch reason
    dotted_side: Optional[int] = None
    dotted_edge: Optional[int] = None

    @property
    def matches(self) -> bool:
        return self.tag is not None


# Subdivision data

class SubdivisionAssignment(BaseModel):
    choice: Dict[int, int]  # face id -> 0 (pair A) or 1 (pair B)


class ParityWitness(BaseModel):
    walk: List[int]  # face, edge, face, edge, ..., face (closed in the dual)


class HomologyCycle(BaseModel):
    edges: List[int]
    vertices: List[int]
    length_parity: int
    w1: int
    lam: int = Field(serialization_alias="lambda")


class HomologyCharacterReport(BaseModel):
    basis: List[HomologyCycle]

    @property
    def all_lambda_zero(self) -> bool:
        return all(c.lam == 0 for c in self.basis)

    @property
    def orientation_character_trivial(self) -> bool:
        return all(c.w1 == 0 for c in self.basis)


class SubdivisionPrediction(BaseModel):
    subdivisible: bool
    rule: str


# Enumeration

class EnumSpec(BaseModel):
    gon: int
    faces: int
    surface: Optional[str] = None
    min_degree: int = 3

    @field_validator("gon")
    @classmethod
    def _gon_supported(cls, value: int) -> int:
        if value not in (4, 5):
            raise ValueError("gon must be 4 or 5")
        return value

    @field_validator("faces")
    @classmethod
    def _faces_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("faces must be positive")
        return value

    @model_validator(mode="after")
    def _sides_pair_up(self):
        if (self.gon * self.faces) % 2:
            raise ValueError("faces x gon must be even")
        return self


class Census(BaseModel):
    total: int
    by_surface: Dict[str, int]
    by_classes: Dict[str, int]


# Exchange format

class LabelsBlock(BaseModel):
    vertex_marks: Optional[Dict[str, VertexMark]] = None
    provenance: Optional[Dict[str, Provenance]] = None
    assignment: Optional[Dict[str, int]] = None


class GMapDocument(BaseModel):
    format: str
    darts: int
    alpha0: List[int]
    alpha1: List[int]
    alpha2: List[int]
    labels: Optional[LabelsBlock] = None
