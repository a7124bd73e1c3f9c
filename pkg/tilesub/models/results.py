from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, InstanceOf

from tilesub.gmap.core import GMap
from tilesub.models.schemas import VertexMark


class RecognitionResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    mode: str  # "sps", "ps", "one-circ" or "qs"
    base: InstanceOf[GMap]
    labeling: Dict[int, VertexMark]
    solution_count: int
    dotted_edges: Optional[Dict[int, int]] = None  # face -> dotted edge (sps)
    tile_types: Optional[Dict[int, str]] = None  # face -> P1/P2/P3 (sps)
    centers: Optional[List[int]] = None  # hollow vertices (ps, one-circ, qs)
    orientable: Optional[bool] = None


class ExpectedRecord(BaseModel):
    surface: str
    faces: int
    face_classes: Optional[Dict[str, int]] = None  # class label -> count, quad tilings only
    subdivisible: Optional[bool] = None
    notes: str = ""


class CatalogueEntry(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    map: InstanceOf[GMap]
    expected: ExpectedRecord
