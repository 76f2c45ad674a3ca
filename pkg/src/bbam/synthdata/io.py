"""Dataset persistence: a YAML manifest plus one .npz record per scene."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import yaml

from ..geometry import Box
from .generate import GENERATOR_VERSION, GeneratorConfig, Instance, Scene

MANIFEST_NAME = "manifest.yaml"


@dataclass
class DatasetManifest:
    split: str
    count: int
    class_names: list[str]
    image_size: int
    generator_version: str
    seed: int
    generator: dict  # GeneratorConfig as dict

    def to_dict(self) -> dict:
        return {
            "split": self.split,
            "count": self.count,
            "class_names": list(self.class_names),
            "image_size": self.image_size,
            "generator_version": self.generator_version,
            "seed": self.seed,
            "generator": self.generator,
        }

    @staticmethod
    def from_dict(d: dict) -> "DatasetManifest":
        return DatasetManifest(
            split=d["split"], count=d["count"], class_names=list(d["class_names"]),
            image_size=d["image_size"], generator_version=str(d["generator_version"]),
            seed=d["seed"], generator=d["generator"],
        )


def _scene_path(root: Path, index: int) -> Path:
    return root / "scenes" / f"scene_{index:05d}.npz"


def save_dataset(scenes: list[Scene], manifest: DatasetManifest, path) -> None:
    root = Path(path)
    (root / "scenes").mkdir(parents=True, exist_ok=True)
    with open(root / MANIFEST_NAME, "w") as f:
        yaml.safe_dump(manifest.to_dict(), f, sort_keys=False)
    for i, scene in enumerate(scenes):
        boxes = np.asarray([inst.box.as_tuple() for inst in scene.instances], dtype=np.float32)
        masks = np.stack([inst.mask for inst in scene.instances]).astype(bool)
        full = np.stack(scene.full_masks).astype(bool) if scene.full_masks else masks
        np.savez_compressed(
            _scene_path(root, i),
            image_u8=np.round(scene.image * 255).astype(np.uint8),
            boxes=boxes,
            classes=np.asarray([inst.class_id for inst in scene.instances], dtype=np.int16),
            masks=np.packbits(masks, axis=None),
            full_masks=np.packbits(full, axis=None),
            shape=np.asarray(masks.shape, dtype=np.int32),
            seed=np.asarray([scene.seed], dtype=np.int64),
        )


def _load_scene(path: Path) -> Scene:
    try:
        with np.load(path) as z:
            shape = tuple(int(v) for v in z["shape"])
            image = z["image_u8"].astype(np.float32) / 255.0
            masks = np.unpackbits(z["masks"], count=int(np.prod(shape))).reshape(shape).astype(bool)
            full = np.unpackbits(z["full_masks"], count=int(np.prod(shape))).reshape(shape).astype(bool)
            boxes = z["boxes"]
            classes = z["classes"]
            seed = int(z["seed"][0])
    except (ValueError, KeyError, EOFError, OSError) as e:
        raise IOError(f"corrupt or truncated scene record {path}: {e}") from e
    instances = [
        Instance(class_id=int(c), box=Box(*map(float, b)), mask=m)
        for c, b, m in zip(classes, boxes, masks)
    ]
    return Scene(image=image, instances=instances, seed=seed, full_masks=list(full))


def load_manifest(path) -> DatasetManifest:
    root = Path(path)
    mpath = root / MANIFEST_NAME
    if not mpath.exists():
        raise FileNotFoundError(f"no dataset manifest at {mpath}")
    with open(mpath) as f:
        manifest = DatasetManifest.from_dict(yaml.safe_load(f))
    if manifest.generator_version != GENERATOR_VERSION:
        raise IOError(
            f"dataset at {root} was written by generator version "
            f"{manifest.generator_version}, this build reads version {GENERATOR_VERSION}"
        )
    return manifest


def load_dataset(path, indices=None) -> tuple[DatasetManifest, list[Scene]]:
    root = Path(path)
    manifest = load_manifest(root)
    if indices is None:
        indices = range(manifest.count)
    scenes = []
    for i in indices:
        spath = _scene_path(root, i)
        if not spath.exists():
            raise FileNotFoundError(f"scene record not found: {spath}")
        scenes.append(_load_scene(spath))
    return manifest, scenes


def dataset_fingerprint(scenes: list[Scene]) -> str:
    """Content hash over images, boxes, classes, and masks (cross-run comparable)."""
    h = hashlib.sha256()
    for s in scenes:
        h.update(np.round(s.image * 255).astype(np.uint8).tobytes())
        for inst in s.instances:
            h.update(np.asarray(inst.box.as_tuple(), dtype=np.float32).tobytes())
            h.update(np.asarray([inst.class_id], dtype=np.int16).tobytes())
            h.update(np.packbits(inst.mask).tobytes())
    return h.hexdigest()
