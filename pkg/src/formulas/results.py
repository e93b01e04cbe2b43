"""Result record shared by every δ_C evaluator."""
import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class Route(str, Enum):
    CHEBYSHEV = "chebyshev-integral"
    PRODUCT_TRIANGLE = "product-triangle"
    PRODUCT_GENERAL = "product-general"
    BALL_BETA = "ball-beta"
    BALL_GAMMA = "ball-gamma"
    RUMELY = "rumely"


class DeltaResult(BaseModel):
    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    route: Route
    log_delta: float
    delta: float
    residual: float = Field(default=0.0, ge=0.0)

    @classmethod
    def from_log(cls, route: Route, log_delta: float, residual: float = 0.0) -> "DeltaResult":
        return cls(route=route, log_delta=log_delta, delta=math.exp(log_delta), residual=abs(residual))
