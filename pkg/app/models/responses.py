"""
Pydantic response models for the Hypertrans API.
Defines the structure for outgoing response data.
"""

from datetime import datetime
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from .bench import BenchRow
from .relation import ConditionalFd
from .results import VertexGroup


class TraversalResponse(BaseModel):
    """Response model for minimal traverse enumeration."""
    algorithm: str
    reduced: bool
    count: int
    traverses: List[List[int]]

    model_config = ConfigDict(json_schema_extra={
        "example": {
            "algorithm": "mmcs",
            "reduced": False,
            "count": 2,
            "traverses": [[1], [2]],
        }
    })


class TmmResponse(BaseModel):
    """Response model for multi-member traverse extraction."""
    mode: str
    tau: int
    smallest_mts: List[List[int]]
    tmms: List[List[int]]
    coverage: int

    model_config = ConfigDict(json_schema_extra={
        "example": {
            "mode": "om2d",
            "tau": 3,
            "smallest_mts": [[1, 4, 7], [2, 4, 7]],
            "tmms": [[2, 4, 7]],
            "coverage": 10,
        }
    })


class IrredundantResponse(BaseModel):
    """Response model for the irredundant pipeline."""
    groups: List[VertexGroup]
    irredundant_edges: List[List[int]]
    irredundant_mts: List[List[int]]
    expanded_count: int
    theta: float
    expanded_mts: Optional[List[List[int]]] = None


class DependencyResponse(BaseModel):
    """Response model for functional dependency inference."""
    attributes: List[str]
    fds: List[str]
    groups: Dict[str, List[str]] = {}
    conditional: List[ConditionalFd] = []

    model_config = ConfigDict(json_schema_extra={
        "example": {
            "attributes": ["A", "B", "C"],
            "fds": ["A -> C", "C -> A"],
            "groups": {},
            "conditional": [],
        }
    })


class BenchRunResponse(BaseModel):
    """Response model for a benchmark run."""
    run_id: str
    rows: List[BenchRow]
    csv: str


class BenchRecordSummary(BenchRow):
    """A stored benchmark row."""
    record_id: str
    run_id: str
    created_at: datetime


class BenchListResponse(BaseModel):
    """Response model for listing stored benchmark rows."""
    rows: List[BenchRecordSummary]
    total_count: int
    limit: int
    offset: int
    has_more: bool
