"""
Fusion entities - feature vectors, scorer parameters and fusion results.
"""
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.exceptions import InvalidParamsError
from app.domain.entities.arrays import readonly_float_array


class FusionMode(str, Enum):
    """How N_CNN feature vectors are combined."""
    SOFT_ATTENTION = "soft_attention"
    SUM = "sum"
    MEAN = "mean"
    MAX = "max"
    CONCATENATE = "concatenate"


class FeatureVector(BaseModel):
    """
    FeatureVector entity: one flattened feature map.

    Attributes:
        values: d finite reals, d >= 1
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: np.ndarray = Field(..., description="1-D float64 values")

    @field_validator("values", mode="before")
    @classmethod
    def _coerce(cls, value):
        return readonly_float_array(value, ndim=1, name="feature vector")

    @property
    def dim(self) -> int:
        return int(self.values.shape[0])

    @classmethod
    def of(cls, values: Sequence[float]) -> "FeatureVector":
        return cls(values=values)


class ScorerParams(BaseModel):
    """
    ScorerParams entity: the shared two-layer perceptron scoring each map.

    Attributes:
        w1: (d, hidden) input-to-hidden weights
        b1: hidden biases
        w2: hidden-to-output weights
        b2: output bias
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True, allow_inf_nan=False)

    w1: np.ndarray
    b1: np.ndarray
    w2: np.ndarray
    b2: float = 0.0

    @field_validator("w1", mode="before")
    @classmethod
    def _coerce_w1(cls, value):
        return readonly_float_array(value, ndim=2, name="w1")

    @field_validator("b1", "w2", mode="before")
    @classmethod
    def _coerce_vectors(cls, value, info):
        return readonly_float_array(value, ndim=1, name=info.field_name)

    @model_validator(mode="after")
    def _check_shapes(self):
        hidden = self.w1.shape[1]
        if self.b1.shape[0] != hidden or self.w2.shape[0] != hidden:
            raise InvalidParamsError(
                "Scorer parameter shapes are inconsistent",
                {"w1": list(self.w1.shape), "b1": self.b1.shape[0], "w2": self.w2.shape[0]}
            )
        return self

    @property
    def d(self) -> int:
        return int(self.w1.shape[0])

    @property
    def hidden(self) -> int:
        return int(self.w1.shape[1])


class FusionResult(BaseModel):
    """
    FusionResult entity.

    Attributes:
        fused: Combined feature vector
        weights: One weight per input map (soft attention, sum, mean), None otherwise
        scores: Raw scorer outputs (soft attention only)
        mode: Fusion mode that produced the result
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    fused: FeatureVector
    weights: Optional[Tuple[float, ...]] = None
    scores: Optional[Tuple[float, ...]] = None
    mode: FusionMode = FusionMode.SOFT_ATTENTION
