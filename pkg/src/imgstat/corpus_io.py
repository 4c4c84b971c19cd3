"""Deterministic corpus ingestion: decode, validate, center-crop, enumerate.

Images are plain numpy arrays: uint8 (H, W, 3) for RGB. A corpus is
described by a manifest (sorted, optionally seed-subsampled entry list)
that is reproducible for a fixed directory tree, seed and limit.
"""

import json
import logging
import os
from dataclasses import dataclass

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import DecodeError, EmptyCorpus, TooSmall

log = logging.getLogger(__name__)

IMAGE_EXTENSIONS = {".png", ".jpg", ".jpeg", ".bmp"}


@dataclass(frozen=True)
class CorpusManifest:
    root: str
    entries: tuple[str, ...]  # paths relative to root, manifest order
    crop_size: int
    sample_seed: int
    sample_limit: int | None  # None = unbounded

    def path(self, entry: str) -> str:
        return os.path.join(self.root, entry)

    def to_json(self) -> str:
        doc = {
            "root": self.root,
            "crop_size": self.crop_size,
            "seed": self.sample_seed,
            "limit": self.sample_limit,
            "entries": list(self.entries),
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "CorpusManifest":
        doc = json.loads(text)
        return cls(
            root=doc["root"],
            entries=tuple(doc["entries"]),
            crop_size=doc["crop_size"],
            sample_seed=doc["seed"],
            sample_limit=doc["limit"],
        )


def load_image(path: str) -> np.ndarray:
    """Decode an image file to a uint8 (H, W, 3) RGB array.

    Grayscale sources are replicated across the three channels. Raises
    DecodeError for corrupt or unsupported files; callers scanning a corpus
    should skip and log rather than abort.
    """
    try:
        with Image.open(path) as im:
            rgb = im.convert("RGB")
            arr = np.asarray(rgb, dtype=np.uint8)
    except (UnidentifiedImageError, OSError, ValueError) as exc:
        raise DecodeError(f"{path}: {exc}") from exc
    if arr.ndim != 3 or arr.shape[2] != 3 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DecodeError(f"{path}: decoded to unexpected shape {arr.shape}")
    return arr


def center_crop(img: np.ndarray, size: int) -> np.ndarray:
    """Central size x size window; offsets floor((H-size)/2), floor((W-size)/2)."""
    h, w = img.shape[:2]
    if h < size or w < size:
        raise TooSmall(f"image {w}x{h} smaller than crop {size}")
    top = (h - size) // 2
    left = (w - size) // 2
    return np.ascontiguousarray(img[top : top + size, left : left + size])


def scan_corpus(
    root: str,
    crop_size: int = 128,
    limit: int | None = None,
    seed: int = 0,
) -> CorpusManifest:
    """Enumerate a directory tree into a reproducible manifest.

    Entries are the recursive set of files with known raster extensions,
    sorted lexicographically by relative path. When limit < total, a seeded
    uniform shuffle selects the prefix; the selected entries are re-sorted
    so manifest order stays lexicographic.
    """
    if not os.path.isdir(root):
        raise EmptyCorpus(f"not a directory: {root}")
    rels = []
    for dirpath, _dirnames, filenames in os.walk(root):
        for name in filenames:
            if os.path.splitext(name)[1].lower() in IMAGE_EXTENSIONS:
                rels.append(os.path.relpath(os.path.join(dirpath, name), root))
    rels = sorted(set(rels))
    if not rels:
        raise EmptyCorpus(f"no image files under {root}")
    if limit is not None and limit < len(rels):
        order = np.random.default_rng(seed).permutation(len(rels))
        rels = sorted(rels[i] for i in order[:limit])
    return CorpusManifest(
        root=root,
        entries=tuple(rels),
        crop_size=crop_size,
        sample_seed=seed,
        sample_limit=limit,
    )


def load_cropped(manifest: CorpusManifest, entry: str) -> np.ndarray:
    """Decode and center-crop one manifest entry."""
    return center_crop(load_image(manifest.path(entry)), manifest.crop_size)
