"""Axis-aligned boxes, IoU, and the center/size offset parameterization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Box:
    """Axis-aligned rectangle in pixel coordinates, corners exclusive of nothing:
    the box covers [x_min, x_max) x [y_min, y_max) when rasterized."""

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self):
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError(f"degenerate box {self.as_tuple()}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x_min, self.y_min, self.x_max, self.y_max)

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def center(self) -> tuple[float, float]:
        return (0.5 * (self.x_min + self.x_max), 0.5 * (self.y_min + self.y_max))

    def clip(self, height: int, width: int) -> "Box":
        """Clip to image bounds; raises if nothing is left."""
        return Box(
            min(max(self.x_min, 0.0), width - 1e-3),
            min(max(self.y_min, 0.0), height - 1e-3),
            max(min(self.x_max, float(width)), 1e-3),
            max(min(self.y_max, float(height)), 1e-3),
        )

    @staticmethod
    def from_mask(mask: np.ndarray) -> "Box":
        """Tight bounding box of a nonempty binary mask (pixel-grid aligned)."""
        ys, xs = np.nonzero(mask)
        if ys.size == 0:
            raise ValueError("empty mask has no bounding box")
        return Box(float(xs.min()), float(ys.min()), float(xs.max() + 1), float(ys.max() + 1))


def box_iou(a: Box, b: Box) -> float:
    ix = max(0.0, min(a.x_max, b.x_max) - max(a.x_min, b.x_min))
    iy = max(0.0, min(a.y_max, b.y_max) - max(a.y_min, b.y_min))
    inter = ix * iy
    union = a.area + b.area - inter
    return inter / union if union > 0 else 0.0


def boxes_to_array(boxes) -> np.ndarray:
    return np.asarray([b.as_tuple() for b in boxes], dtype=np.float32).reshape(-1, 4)


def pairwise_iou(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """IoU matrix between (N,4) and (M,4) arrays of x1,y1,x2,y2 boxes."""
    a = np.asarray(a, dtype=np.float64).reshape(-1, 4)
    b = np.asarray(b, dtype=np.float64).reshape(-1, 4)
    ix = np.clip(
        np.minimum(a[:, None, 2], b[None, :, 2]) - np.maximum(a[:, None, 0], b[None, :, 0]), 0, None
    )
    iy = np.clip(
        np.minimum(a[:, None, 3], b[None, :, 3]) - np.maximum(a[:, None, 1], b[None, :, 1]), 0, None
    )
    inter = ix * iy
    area_a = (a[:, 2] - a[:, 0]) * (a[:, 3] - a[:, 1])
    area_b = (b[:, 2] - b[:, 0]) * (b[:, 3] - b[:, 1])
    union = area_a[:, None] + area_b[None, :] - inter
    with np.errstate(invalid="ignore", divide="ignore"):
        iou = np.where(union > 0, inter / union, 0.0)
    return iou


def encode_box(box: Box, anchor: Box) -> np.ndarray:
    """Offsets (tx, ty, tw, th) of `box` relative to `anchor` in center/size form:
    tx = (cx - cxa) / wa, tw = log(w / wa), and likewise for y/h."""
    if anchor.width <= 0 or anchor.height <= 0 or box.width <= 0 or box.height <= 0:
        raise ValueError("boxes must have positive extent")
    cx, cy = box.center
    cxa, cya = anchor.center
    t = np.array(
        [
            (cx - cxa) / anchor.width,
            (cy - cya) / anchor.height,
            np.log(box.width / anchor.width),
            np.log(box.height / anchor.height),
        ],
        dtype=np.float64,
    )
    if not np.all(np.isfinite(t)):
        raise ValueError("non-finite offsets")
    return t


def decode_box(offsets: np.ndarray, anchor: Box) -> Box:
    """Inverse of :func:`encode_box`."""
    tx, ty, tw, th = np.asarray(offsets, dtype=np.float64).reshape(4)
    cxa, cya = anchor.center
    cx = cxa + tx * anchor.width
    cy = cya + ty * anchor.height
    w = anchor.width * np.exp(tw)
    h = anchor.height * np.exp(th)
    return Box(cx - w / 2, cy - h / 2, cx + w / 2, cy + h / 2)


def nms(boxes: np.ndarray, scores: np.ndarray, iou_threshold: float = 0.5) -> np.ndarray:
    """Greedy non-maximum suppression; returns kept indices in score order."""
    order = np.argsort(-np.asarray(scores), kind="stable")
    boxes = np.asarray(boxes, dtype=np.float64).reshape(-1, 4)
    keep = []
    suppressed = np.zeros(len(order), dtype=bool)
    for rank, i in enumerate(order):
        if suppressed[rank]:
            continue
        keep.append(int(i))
        rest = order[rank + 1 :]
        if rest.size:
            ious = pairwise_iou(boxes[i : i + 1], boxes[rest])[0]
            suppressed[rank + 1 :] |= ious > iou_threshold
    return np.asarray(keep, dtype=np.int64)


def mask_iou(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a, dtype=bool)
    b = np.asarray(b, dtype=bool)
    union = np.logical_or(a, b).sum()
    if union == 0:
        return 0.0
    return float(np.logical_and(a, b).sum() / union)
