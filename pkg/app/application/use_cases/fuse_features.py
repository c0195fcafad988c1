"""
Fuse Features Use Case.
Combines feature-vector files with the soft-attention ensemble or a baseline.
"""
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import BaseModel, Field

from app.application.strategies import get_fusion_strategy
from app.core.logging import log
from app.domain.entities import FusionMode, Normalization
from app.domain.repositories import IArtifactStore
from app.domain.services import init_params


class FuseSummary(BaseModel):
    mode: str
    maps: int
    dim: int
    weights: Optional[List[float]] = None
    scores: Optional[List[float]] = None
    outputs: List[str] = Field(default_factory=list)


class FuseFeaturesUseCase:
    """
    Use case for fusing N_CNN feature vectors.

    Scorer parameters come from a file or, failing that, from the seeded initialiser.
    """

    def __init__(self, artifact_store: IArtifactStore):
        self.store = artifact_store

    def execute(
        self,
        vector_paths: Sequence[str],
        mode: FusionMode = FusionMode.SOFT_ATTENTION,
        params_path: Optional[str] = None,
        seed: int = 0,
        out_dir: Optional[str] = None,
        write_params: Optional[str] = None
    ) -> FuseSummary:
        """
        Fuse the vectors and write fused.star into out_dir.

        Raises:
            InvalidFeatureError: If fewer than two vectors are given
            DimensionMismatchError: If vector lengths differ from each other or from the params
            InvalidParamsError: If the params file is malformed
        """
        maps = [self.store.load_feature_vector(path) for path in vector_paths]
        strategy = get_fusion_strategy(mode)

        params = None
        outputs = []
        if strategy.requires_params():
            if params_path is not None:
                params = self.store.load_params(params_path)
            else:
                dim = maps[0].dim if maps else 1
                log.info(f"No params file given; initialising scorer for d={dim} with seed {seed}")
                params = init_params(dim, seed)
            if write_params is not None:
                outputs.append(self.store.save_params(write_params, params))

        log.info(f"Fusing {len(maps)} feature maps with {strategy.get_strategy_name()}")
        result = strategy.fuse(maps, params)

        if out_dir is not None:
            header = {
                "kind": "fused_vector",
                "clip_id": "",
                "metric": None,
                "normalization": Normalization.NONE.value,
                "segment_bounds": None,
                "mode": result.mode.value,
                "weights": list(result.weights) if result.weights is not None else None,
            }
            fused = result.fused.values.reshape(1, -1, 1)
            outputs.append(self.store.write_sidecar(str(Path(out_dir) / "fused.star"), fused, header))

        return FuseSummary(
            mode=result.mode.value,
            maps=len(maps),
            dim=result.fused.dim,
            weights=list(result.weights) if result.weights is not None else None,
            scores=list(result.scores) if result.scores is not None else None,
            outputs=outputs,
        )
