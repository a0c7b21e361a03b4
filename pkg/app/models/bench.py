"""
Generator specifications and benchmark rows.
"""

import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, model_validator


class RandomSpec(BaseModel):
    """n vertices, m edges, per-edge membership probability drawn in [p_l, p_u]."""
    model_config = ConfigDict(frozen=True)

    n: PositiveInt
    m: PositiveInt
    p_l: float = Field(ge=0.0, le=1.0)
    p_u: float = Field(gt=0.0, le=1.0)
    seed: int = Field(default=20130101, ge=0, lt=2**64)

    @model_validator(mode="after")
    def _ordered_bounds(self) -> "RandomSpec":
        if self.p_l > self.p_u:
            raise ValueError(f"p_l={self.p_l} exceeds p_u={self.p_u}")
        return self


class BenchRow(BaseModel):
    """One (instance, algorithm) measurement. Counts are None on failed rows."""
    model_config = ConfigDict(frozen=True)

    id: str
    n: NonNegativeInt
    m: NonNegativeInt
    backend: str
    mt_count: Optional[NonNegativeInt] = None
    irr_count: Optional[NonNegativeInt] = None
    theta: Optional[float] = None
    tau: Optional[PositiveInt] = None
    ms: Optional[float] = None
    error: Optional[str] = None

    @model_validator(mode="after")
    def _check_theta(self) -> "BenchRow":
        if self.theta is not None:
            if self.mt_count is None or self.irr_count is None:
                raise ValueError("theta needs both counts")
            expected = (self.mt_count - self.irr_count) / self.mt_count
            if not math.isclose(self.theta, expected, abs_tol=1e-12):
                raise ValueError(f"theta {self.theta} does not match the counts")
        return self

    @property
    def failed(self) -> bool:
        return self.error is not None
