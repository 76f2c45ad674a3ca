"""Reproducible synthetic scenes: textured backgrounds, colored shapes, exact masks.

A scene is a pure function of (config, seed). Instances are stored bottom-to-top;
later instances occlude earlier ones, each stored mask is the *visible* part of
its shape, and each box is the tight bounding rectangle of that visible mask.
"""

from __future__ import annotations

from dataclasses import dataclass, field, asdict

import numpy as np

from ..geometry import Box
from . import shapes

GENERATOR_VERSION = "1"


@dataclass
class GeneratorConfig:
    image_size: int = 128
    min_instances: int = 1
    max_instances: int = 3
    classes: tuple[str, ...] = shapes.CLASS_NAMES
    area_range: tuple[float, float] = (0.04, 0.5)
    aspect_range: tuple[float, float] = (1.0, 2.2)
    rotation_range_deg: tuple[float, float] = (0.0, 180.0)
    ring_inner_range: tuple[float, float] = (0.45, 0.62)
    cross_thickness_range: tuple[float, float] = (0.26, 0.38)
    min_visible_fraction: float = 0.55
    background_texture: float = 0.22
    instance_noise: float = 0.05

    def validate(self) -> None:
        if not (16 <= self.image_size <= 512):
            raise ValueError(f"image_size {self.image_size} outside supported range")
        if not (1 <= self.min_instances <= self.max_instances <= 8):
            raise ValueError("instance count range invalid")
        unknown = set(self.classes) - set(shapes.CLASS_NAMES)
        if unknown:
            raise ValueError(f"unknown shape classes {sorted(unknown)}")
        lo, hi = self.area_range
        if not (0 < lo <= hi <= 1.0):
            raise ValueError(f"area_range {self.area_range} invalid")
        # The smallest requested object must be drawable on the canvas in at
        # least one orientation; otherwise every placement attempt would fail.
        min_area_px = lo * self.image_size**2
        if np.sqrt(min_area_px) > self.image_size:
            raise ValueError("instances cannot fit the canvas")
        if min_area_px < 16:
            raise ValueError("smallest instances would rasterize to fewer than ~16 px")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["classes"] = list(self.classes)
        return d

    @staticmethod
    def from_dict(d: dict) -> "GeneratorConfig":
        d = dict(d)
        if "classes" in d:
            d["classes"] = tuple(d["classes"])
        for key in ("area_range", "aspect_range", "rotation_range_deg",
                    "ring_inner_range", "cross_thickness_range"):
            if key in d:
                d[key] = tuple(d[key])
        cfg = GeneratorConfig(**d)
        cfg.validate()
        return cfg


@dataclass
class Instance:
    class_id: int
    box: Box
    mask: np.ndarray  # bool (H, W), visible part only


@dataclass
class Scene:
    image: np.ndarray  # float32 (H, W, 3) in [0, 1], values quantized to k/255
    instances: list[Instance]
    seed: int
    full_masks: list[np.ndarray] = field(default_factory=list)  # pre-occlusion shapes

    @property
    def size(self) -> int:
        return self.image.shape[0]

    def semantic_map(self, num_classes: int) -> np.ndarray:
        """Ground-truth semantic labels: 0 = background, 1..C = shape classes."""
        out = np.zeros(self.image.shape[:2], dtype=np.uint8)
        for inst in self.instances:  # visible masks are disjoint
            out[inst.mask] = inst.class_id + 1
        return out


def scene_seed(global_seed: int, index: int) -> int:
    """Stable per-scene seed derived from the dataset seed and scene index."""
    return int(np.random.SeedSequence((int(global_seed), int(index))).generate_state(1)[0])


def _textured_background(size: int, amplitude: float, rng: np.random.Generator) -> np.ndarray:
    """Muted base color plus two octaves of smooth noise (real edges, no flat fills)."""
    base = rng.uniform(0.3, 0.7, size=3)
    img = np.broadcast_to(base, (size, size, 3)).astype(np.float64).copy()
    for cells, weight in ((8, 1.0), (24, 0.45)):
        coarse = rng.uniform(-1, 1, size=(cells, cells, 3))
        ys = np.linspace(0, cells - 1, size)
        xs = np.linspace(0, cells - 1, size)
        y0 = np.clip(ys.astype(int), 0, cells - 2)
        x0 = np.clip(xs.astype(int), 0, cells - 2)
        wy = (ys - y0)[:, None, None]
        wx = (xs - x0)[None, :, None]
        c00 = coarse[y0][:, x0]
        c01 = coarse[y0][:, x0 + 1]
        c10 = coarse[y0 + 1][:, x0]
        c11 = coarse[y0 + 1][:, x0 + 1]
        layer = (c00 * (1 - wy) * (1 - wx) + c01 * (1 - wy) * wx
                 + c10 * wy * (1 - wx) + c11 * wy * wx)
        img += amplitude * weight * layer
    return np.clip(img, 0.02, 0.98)


def _instance_color(rng: np.random.Generator) -> np.ndarray:
    """Saturated color, clearly separable from the muted background."""
    hue = rng.uniform(0, 1)
    sat = rng.uniform(0.65, 1.0)
    val = rng.choice([rng.uniform(0.75, 1.0), rng.uniform(0.08, 0.3)])
    i = int(hue * 6) % 6
    f = hue * 6 - int(hue * 6)
    p, q, t = val * (1 - sat), val * (1 - f * sat), val * (1 - (1 - f) * sat)
    rgb = [(val, t, p), (q, val, p), (p, val, t), (p, q, val), (t, p, val), (val, p, q)][i]
    return np.asarray(rgb)


def generate_scene(config: GeneratorConfig, seed: int) -> Scene:
    """Generate one scene deterministically from (config, seed)."""
    config.validate()
    rng = np.random.default_rng(seed)
    size = config.image_size
    area_px = size * size

    n_instances = int(rng.integers(config.min_instances, config.max_instances + 1))
    rot_lo, rot_hi = np.deg2rad(config.rotation_range_deg)

    for _ in range(30):  # whole-scene retries when occlusion is too strong
        placements = []
        for _ in range(n_instances):
            for _attempt in range(50):
                kind = str(rng.choice(config.classes))
                lo, hi = config.area_range
                area = float(np.exp(rng.uniform(np.log(lo), np.log(hi)))) * area_px
                params = shapes.shape_params_for_area(
                    kind, area, rng,
                    aspect_range=config.aspect_range,
                    ring_inner_range=config.ring_inner_range,
                    cross_thickness_range=config.cross_thickness_range,
                    rotation_range=(rot_lo, rot_hi),
                )
                ex, ey = shapes.shape_half_extents(kind, params)
                if 2 * ex <= size and 2 * ey <= size:
                    cx = float(rng.uniform(ex, size - ex))
                    cy = float(rng.uniform(ey, size - ey))
                    placements.append((kind, cx, cy, params, area))
                    break
            else:
                raise ValueError("instance cannot fit the canvas under this config")

        # Large shapes at the bottom of the stack keeps occlusion mild.
        placements.sort(key=lambda p: -p[4])
        full = [shapes.rasterize(k, size, cx, cy, params)
                for k, cx, cy, params, _ in placements]
        visible = []
        ok = True
        for i, m in enumerate(full):
            vis = m.copy()
            for j in range(i + 1, len(full)):
                vis &= ~full[j]
            frac = vis.sum() / max(m.sum(), 1)
            if m.sum() < 16 or frac < config.min_visible_fraction or vis.sum() < 16:
                ok = False
                break
            visible.append(vis)
        if ok:
            break
    else:
        raise ValueError("could not place instances within occlusion limits")

    img = _textured_background(size, config.background_texture, rng)
    instances = []
    full_masks = []
    for (kind, _, _, _, _), m_full, m_vis in zip(placements, full, visible):
        color = _instance_color(rng)
        noise = rng.normal(0, config.instance_noise, size=(size, size, 1))
        img = np.where(m_full[:, :, None], np.clip(color + noise, 0.0, 1.0), img)
        instances.append(Instance(
            class_id=config.classes.index(kind),
            box=Box.from_mask(m_vis),
            mask=m_vis,
        ))
        full_masks.append(m_full)

    # Quantize so uint8 storage is lossless; work in float32 afterwards.
    image = (np.round(np.clip(img, 0, 1) * 255).astype(np.uint8).astype(np.float32) / 255.0)
    return Scene(image=image, instances=instances, seed=int(seed), full_masks=full_masks)


def generate_dataset(config: GeneratorConfig, count: int, global_seed: int) -> list[Scene]:
    return [generate_scene(config, scene_seed(global_seed, i)) for i in range(count)]


def channel_mean(scenes) -> np.ndarray:
    """Per-channel mean color over a list of scenes (the perturbation fill color)."""
    total = np.zeros(3, dtype=np.float64)
    n = 0
    for s in scenes:
        total += s.image.reshape(-1, 3).sum(axis=0)
        n += s.image.shape[0] * s.image.shape[1]
    return (total / n).astype(np.float32)
