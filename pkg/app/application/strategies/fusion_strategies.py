"""
Fusion strategies: soft attention and the baselines it is measured against.
"""
from typing import Dict, Optional, Sequence, Type

import numpy as np

from app.application.strategies.base_strategy import FusionStrategy
from app.core.exceptions import InvalidParamsError
from app.core.logging import log
from app.domain.entities import FeatureVector, FusionMode, FusionResult, ScorerParams
from app.domain.services import attention_fusion
from app.domain.services.attention_fusion import check_maps, weighted_sum


class SoftAttentionFusion(FusionStrategy):
    """Softmax-weighted sum, weights scored by the shared perceptron."""

    mode = FusionMode.SOFT_ATTENTION

    def requires_params(self) -> bool:
        return True

    def fuse(self, maps: Sequence[FeatureVector], params: Optional[ScorerParams] = None) -> FusionResult:
        if params is None:
            raise InvalidParamsError("soft attention fusion requires scorer parameters")
        result = attention_fusion.fuse(maps, params)
        log.debug(f"Attention weights: {result.weights}")
        return result


class SumFusion(FusionStrategy):
    """Element-wise sum, every weight 1."""

    mode = FusionMode.SUM

    def fuse(self, maps: Sequence[FeatureVector], params: Optional[ScorerParams] = None) -> FusionResult:
        check_maps(maps)
        weights = (1.0,) * len(maps)
        return FusionResult(fused=FeatureVector(values=weighted_sum(maps, weights)), weights=weights, mode=self.mode)


class MeanFusion(FusionStrategy):
    """Arithmetic mean, every weight 1/N_CNN."""

    mode = FusionMode.MEAN

    def fuse(self, maps: Sequence[FeatureVector], params: Optional[ScorerParams] = None) -> FusionResult:
        check_maps(maps)
        weights = (1.0 / len(maps),) * len(maps)
        return FusionResult(fused=FeatureVector(values=weighted_sum(maps, weights)), weights=weights, mode=self.mode)


class MaxFusion(FusionStrategy):
    """Element-wise maximum."""

    mode = FusionMode.MAX

    def fuse(self, maps: Sequence[FeatureVector], params: Optional[ScorerParams] = None) -> FusionResult:
        check_maps(maps)
        fused = np.max(np.stack([m.values for m in maps]), axis=0)
        return FusionResult(fused=FeatureVector(values=fused), mode=self.mode)


class ConcatenateFusion(FusionStrategy):
    """Concatenation in input order; output length N_CNN * d."""

    mode = FusionMode.CONCATENATE

    def fuse(self, maps: Sequence[FeatureVector], params: Optional[ScorerParams] = None) -> FusionResult:
        check_maps(maps)
        fused = np.concatenate([m.values for m in maps])
        return FusionResult(fused=FeatureVector(values=fused), mode=self.mode)


_FUSION_STRATEGIES: Dict[FusionMode, Type[FusionStrategy]] = {
    FusionMode.SOFT_ATTENTION: SoftAttentionFusion,
    FusionMode.SUM: SumFusion,
    FusionMode.MEAN: MeanFusion,
    FusionMode.MAX: MaxFusion,
    FusionMode.CONCATENATE: ConcatenateFusion,
}


def get_fusion_strategy(mode: FusionMode) -> FusionStrategy:
    """Strategy instance for a fusion mode."""
    return _FUSION_STRATEGIES[FusionMode(mode)]()


def fuse_with(
    mode: FusionMode,
    maps: Sequence[FeatureVector],
    params: Optional[ScorerParams] = None
) -> FusionResult:
    """Fuse maps with the named mode."""
    return get_fusion_strategy(mode).fuse(maps, params)
