"""
DistanceBreakdown entity - the parts of one cosine-scaled pixel distance.
"""
from pydantic import BaseModel, ConfigDict, Field


class DistanceBreakdown(BaseModel):
    """
    DistanceBreakdown entity.

    Attributes:
        lambda_: 1 - cos(theta) between the two pixel vectors (serialized as "lambda")
        chroma_factor: 1 - lambda/2
        norm_a: L2 norm of the first pixel
        norm_b: L2 norm of the second pixel
        value: chroma_factor * |norm_a - norm_b|
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lambda_: float = Field(..., alias="lambda", ge=0.0, le=2.0)
    chroma_factor: float = Field(..., ge=0.0, le=1.0)
    norm_a: float = Field(..., ge=0.0)
    norm_b: float = Field(..., ge=0.0)
    value: float = Field(..., ge=0.0)

    @classmethod
    def build(cls, lambda_: float, norm_a: float, norm_b: float) -> "DistanceBreakdown":
        """Derive chroma factor and value from lambda and the two norms."""
        chroma_factor = 1.0 - lambda_ / 2.0
        return cls(
            lambda_=lambda_,
            chroma_factor=chroma_factor,
            norm_a=norm_a,
            norm_b=norm_b,
            value=chroma_factor * abs(norm_a - norm_b),
        )
