"""
Argument parser for the star-rgb command line.
"""
import argparse

from app.cli.schemas import (
    AUGMENT_PRESETS,
    FUSION_MODE_CHOICES,
    METRIC_CHOICES,
    NORMALIZE_CHOICES,
    Command,
)
from app.core.config import settings


def _encoding_options() -> argparse.ArgumentParser:
    """Flags shared by encode and batch."""
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("encoding")
    group.add_argument("--metric", choices=sorted(METRIC_CHOICES), help="pixel distance (default: cosine, abs-gray with --legacy)")
    family = group.add_mutually_exclusive_group()
    family.add_argument("--star-rgb", action="store_true", help="tri-split three-channel star (default)")
    family.add_argument("--legacy", action="store_true", help="single-channel star")
    group.add_argument("--weighted-shadow", action="store_true", help="weight the k-th difference by k/N (implies --legacy)")
    group.add_argument("--sobel", action="store_true", help="also write Sobel X/Y channels (implies --legacy)")
    group.add_argument("--normalize", choices=list(NORMALIZE_CHOICES), default="global", help="export normalisation")
    group.add_argument("--resize", nargs=2, type=int, metavar=("W", "H"), help="resize frames before encoding")
    group.add_argument("--augment", choices=["none", *AUGMENT_PRESETS], default="none", help="corpus transform preset")
    group.add_argument("--seed", type=int, default=settings.default_seed, help="augmentation seed")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="star-rgb",
        description="Condense gesture clips into star images and fuse feature vectors.",
    )
    parser.add_argument("--version", action="version", version=f"{settings.app_name} {settings.app_version}")
    sub = parser.add_subparsers(dest="command", required=True)
    encoding = _encoding_options()

    p_encode = sub.add_parser(Command.ENCODE.value, parents=[encoding], help="encode one clip")
    p_encode.add_argument("source", nargs="?", help="frame directory or .strv container")
    p_encode.add_argument("--manifest", help="take the clip from a manifest instead")
    p_encode.add_argument("--clip-id", help="manifest entry to encode, or output name for SOURCE")
    p_encode.add_argument("--reverse", action="store_true", help="encode the clip played backwards")
    p_encode.add_argument("--out", required=True, help="output directory")

    p_batch = sub.add_parser(Command.BATCH.value, parents=[encoding], help="encode every manifest entry")
    p_batch.add_argument("--manifest", required=True)
    p_batch.add_argument("--out", required=True)
    p_batch.add_argument("--jobs", type=int, default=settings.default_jobs, help="worker processes")

    p_segment = sub.add_parser(Command.SEGMENT.value, help="write one frame directory per gesture")
    p_segment.add_argument("--manifest", required=True)
    p_segment.add_argument("--out", required=True)

    p_compare = sub.add_parser(Command.COMPARE.value, help="absolute difference of two star images")
    p_compare.add_argument("images", nargs=2, metavar="IMAGE", help=".star sidecar or PNG")
    p_compare.add_argument("--swap-rb", action="store_true", help="swap R and B of the second image")
    p_compare.add_argument("--out", help="write diff.star and diff.png here")

    p_fuse = sub.add_parser(Command.FUSE.value, help="fuse feature vectors")
    p_fuse.add_argument("vectors", nargs="+", metavar="VECTOR", help="JSON array or .star sidecar")
    p_fuse.add_argument("--params", help="scorer parameter file")
    p_fuse.add_argument("--mode", choices=list(FUSION_MODE_CHOICES), default="soft-attention")
    p_fuse.add_argument("--seed", type=int, default=settings.default_seed, help="scorer init seed when --params is absent")
    p_fuse.add_argument("--write-params", help="save the parameters used")
    p_fuse.add_argument("--out", help="write fused.star here")

    return parser
