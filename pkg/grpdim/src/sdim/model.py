from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class SdimMethod(str, Enum):
    SUBSET_ORACLE = "subset_oracle"
    VERTEX_COVER = "vertex_cover"
    DIAMETER2_CLIQUE = "diameter2_clique"
    CLOSED_FORM = "closed_form"


class SdimResult(BaseModel):
    """
    Strong metric dimension of a graph together with how it was obtained.

    Attributes:
        value: sdim of the graph.
        method: Route that produced the value.
        witness: A strong resolving set of size value, when the route yields one.
        omega_reduced: Clique number of the reduced graph (diameter-2 route only).
        vcount: Number of vertices of the graph.
    """
    value: int = Field(..., ge=0)
    method: SdimMethod
    witness: Optional[List[int]] = None
    omega_reduced: Optional[int] = None
    vcount: int = Field(..., ge=0)

    model_config = ConfigDict(frozen=True, use_enum_values=False)
