"""
Pydantic request models for the Hypertrans API.
Instances travel as .dat text and relations as CSV text, exactly as the CLI reads them.
"""

from typing import List

from pydantic import BaseModel, ConfigDict, Field

from ..algorithms.enumeration import Algorithm, Backend
from ..algorithms.multimember import TmmMode

_HYP2 = "1 2\n2 3 4\n3 4 5 6 7\n7 8 9\n"


class TraversalRequest(BaseModel):
    """Request model for minimal traverse enumeration."""
    instance: str
    algorithm: Algorithm = Algorithm.MMCS

    model_config = ConfigDict(json_schema_extra={
        "example": {"instance": _HYP2, "algorithm": "mmcs"}
    })


class InstanceRequest(BaseModel):
    """Request model for endpoints that only need an instance."""
    instance: str

    model_config = ConfigDict(json_schema_extra={"example": {"instance": _HYP2}})


class TmmRequest(BaseModel):
    """Request model for multi-member traverse extraction."""
    instance: str
    mode: TmmMode = TmmMode.OM2D

    model_config = ConfigDict(json_schema_extra={
        "example": {"instance": "1 2\n2 3 7\n3 4 5\n4 6\n6 7 8\n7\n", "mode": "om2d"}
    })


class IrredundantRequest(BaseModel):
    """Request model for the irredundant pipeline."""
    instance: str
    backend: Backend = Backend.MMCS
    expand: bool = False

    model_config = ConfigDict(json_schema_extra={
        "example": {"instance": _HYP2, "backend": "mmcs", "expand": True}
    })


class DependencyRequest(BaseModel):
    """Request model for functional dependency inference."""
    csv: str
    backend: Backend = Backend.MMCS
    concise: bool = False
    conditional: bool = False

    model_config = ConfigDict(json_schema_extra={
        "example": {"csv": "A,B,C\n1,x,p\n1,y,p\n2,y,q\n", "concise": True, "conditional": False}
    })


class BenchRequest(BaseModel):
    """Request model for a benchmark run over inline instances."""
    instances: List[str] = Field(default_factory=list)
    algorithms: List[Algorithm] = Field(default_factory=lambda: [Algorithm.MMCS])
    with_irr: bool = False

    model_config = ConfigDict(json_schema_extra={
        "example": {"instances": [_HYP2], "algorithms": ["berge", "mmcs"], "with_irr": True}
    })
