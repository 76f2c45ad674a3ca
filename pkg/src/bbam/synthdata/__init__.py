from .generate import (
    GENERATOR_VERSION,
    GeneratorConfig,
    Instance,
    Scene,
    channel_mean,
    generate_dataset,
    generate_scene,
    scene_seed,
)
from .io import DatasetManifest, dataset_fingerprint, load_dataset, load_manifest, save_dataset
from .shapes import CLASS_NAMES

__all__ = [
    "GENERATOR_VERSION", "GeneratorConfig", "Instance", "Scene", "channel_mean",
    "generate_dataset", "generate_scene", "scene_seed", "DatasetManifest",
    "dataset_fingerprint", "load_dataset", "load_manifest", "save_dataset", "CLASS_NAMES",
]
