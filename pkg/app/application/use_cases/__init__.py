"""Application use cases."""
from app.application.use_cases.encode_clip import EncodeClipUseCase, EncodeRequest, EncodeSummary
from app.application.use_cases.batch_encode import BatchEncodeUseCase, BatchReport, BatchEntryOutcome
from app.application.use_cases.compare_images import CompareImagesUseCase, CompareSummary
from app.application.use_cases.fuse_features import FuseFeaturesUseCase, FuseSummary
from app.application.use_cases.segment_corpus import SegmentCorpusUseCase, SegmentReport

__all__ = [
    "EncodeClipUseCase",
    "EncodeRequest",
    "EncodeSummary",
    "BatchEncodeUseCase",
    "BatchReport",
    "BatchEntryOutcome",
    "CompareImagesUseCase",
    "CompareSummary",
    "FuseFeaturesUseCase",
    "FuseSummary",
    "SegmentCorpusUseCase",
    "SegmentReport",
]
