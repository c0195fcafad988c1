"""
Pixel entity - one RGB sample of a frame.
"""
import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class Pixel(BaseModel):
    """
    Pixel entity holding real-valued channel intensities.

    Attributes:
        r: Red intensity, nominally in [0, 255]
        g: Green intensity
        b: Blue intensity
    """
    model_config = ConfigDict(
        frozen=True,
        allow_inf_nan=False,
        json_schema_extra={"example": {"r": 255.0, "g": 128.0, "b": 0.0}},
    )

    r: float = Field(0.0, ge=0.0, description="Red channel")
    g: float = Field(0.0, ge=0.0, description="Green channel")
    b: float = Field(0.0, ge=0.0, description="Blue channel")

    @classmethod
    def of(cls, r: float, g: float, b: float) -> "Pixel":
        """Positional constructor."""
        return cls(r=r, g=g, b=b)

    def as_array(self) -> np.ndarray:
        """Channel vector (r, g, b) as float64."""
        return np.array([self.r, self.g, self.b], dtype=np.float64)
