"""Rasterizers for the five synthetic shape classes.

All shapes are drawn on a pixel-center grid: pixel (row, col) is inside the
shape iff its center (col + 0.5, row + 0.5) satisfies the analytic inclusion
test. Masks are therefore crisp (no anti-aliasing) and their areas track the
analytic formulas to rasterization accuracy.
"""

from __future__ import annotations

import numpy as np

CLASS_NAMES = ("disk", "rectangle", "triangle", "ring", "cross")


def _grid(size: int, cx: float, cy: float, rotation: float = 0.0):
    """Pixel-center coordinates relative to (cx, cy), rotated by -rotation."""
    ys, xs = np.mgrid[0:size, 0:size]
    dx = xs + 0.5 - cx
    dy = ys + 0.5 - cy
    if rotation:
        c, s = np.cos(rotation), np.sin(rotation)
        u = c * dx + s * dy
        v = -s * dx + c * dy
        return u, v
    return dx, dy


def disk_mask(size: int, cx: float, cy: float, radius: float) -> np.ndarray:
    dx, dy = _grid(size, cx, cy)
    return dx * dx + dy * dy <= radius * radius


def ring_mask(size: int, cx: float, cy: float, outer: float, inner: float) -> np.ndarray:
    dx, dy = _grid(size, cx, cy)
    d2 = dx * dx + dy * dy
    return (d2 <= outer * outer) & (d2 >= inner * inner)


def rectangle_mask(
    size: int, cx: float, cy: float, width: float, height: float, rotation: float = 0.0
) -> np.ndarray:
    u, v = _grid(size, cx, cy, rotation)
    return (np.abs(u) <= width / 2) & (np.abs(v) <= height / 2)


def triangle_mask(size: int, cx: float, cy: float, circumradius: float, rotation: float = 0.0) -> np.ndarray:
    """Equilateral triangle with the given circumradius, centered on its centroid."""
    u, v = _grid(size, cx, cy, rotation)
    r = circumradius
    # Vertices at angle 90, 210, 330 degrees; inside = intersection of three half-planes.
    angles = np.deg2rad([90.0, 210.0, 330.0])
    verts = np.stack([r * np.cos(angles), r * np.sin(angles)], axis=1)
    inside = np.ones((size, size), dtype=bool)
    for i in range(3):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % 3]
        # Half-plane to the left of edge a->b (vertices are counter-clockwise).
        inside &= (bx - ax) * (v - ay) - (by - ay) * (u - ax) >= 0
    return inside


def cross_mask(
    size: int, cx: float, cy: float, length: float, thickness: float, rotation: float = 0.0
) -> np.ndarray:
    """Plus-shaped union of two centered bars of the given length and thickness."""
    u, v = _grid(size, cx, cy, rotation)
    horizontal = (np.abs(u) <= length / 2) & (np.abs(v) <= thickness / 2)
    vertical = (np.abs(u) <= thickness / 2) & (np.abs(v) <= length / 2)
    return horizontal | vertical


def shape_half_extents(kind: str, params: dict) -> tuple[float, float]:
    """Half width/height of the shape's tight bounding box after rotation."""
    rot = params.get("rotation", 0.0)
    c, s = abs(np.cos(rot)), abs(np.sin(rot))
    if kind == "disk":
        r = params["radius"]
        return r, r
    if kind == "ring":
        r = params["outer"]
        return r, r
    if kind == "rectangle":
        w, h = params["width"], params["height"]
        return (w * c + h * s) / 2, (w * s + h * c) / 2
    if kind == "triangle":
        r = params["circumradius"]
        angles = np.deg2rad([90.0, 210.0, 330.0]) + rot
        xs = r * np.cos(angles)
        ys = r * np.sin(angles)
        return (xs.max() - xs.min()) / 2, (ys.max() - ys.min()) / 2
    if kind == "cross":
        length, t = params["length"], params["thickness"]
        ex = (length * c + t * s) / 2
        ey = (length * s + t * c) / 2
        # Either bar can dominate either axis.
        ex2 = (t * c + length * s) / 2
        ey2 = (t * s + length * c) / 2
        return max(ex, ex2), max(ey, ey2)
    raise ValueError(f"unknown shape kind {kind!r}")


def shape_params_for_area(kind: str, area: float, rng: np.random.Generator, *,
                          aspect_range=(1.0, 2.2), ring_inner_range=(0.45, 0.62),
                          cross_thickness_range=(0.26, 0.38), rotation_range=(0.0, np.pi)) -> dict:
    """Sample free shape parameters so the analytic area equals `area` (pixels^2)."""
    rotation = float(rng.uniform(*rotation_range))
    if kind == "disk":
        return {"radius": float(np.sqrt(area / np.pi)), "rotation": 0.0}
    if kind == "ring":
        k = float(rng.uniform(*ring_inner_range))
        outer = float(np.sqrt(area / (np.pi * (1 - k * k))))
        return {"outer": outer, "inner": k * outer, "rotation": 0.0}
    if kind == "rectangle":
        q = float(rng.uniform(*aspect_range))
        w = float(np.sqrt(area * q))
        return {"width": w, "height": float(area / w), "rotation": rotation}
    if kind == "triangle":
        # Equilateral area = (3*sqrt(3)/4) * R^2.
        return {"circumradius": float(np.sqrt(4 * area / (3 * np.sqrt(3)))), "rotation": rotation}
    if kind == "cross":
        c = float(rng.uniform(*cross_thickness_range))
        length = float(np.sqrt(area / (2 * c - c * c)))
        return {"length": length, "thickness": c * length, "rotation": rotation}
    raise ValueError(f"unknown shape kind {kind!r}")


def rasterize(kind: str, size: int, cx: float, cy: float, params: dict) -> np.ndarray:
    rot = params.get("rotation", 0.0)
    if kind == "disk":
        return disk_mask(size, cx, cy, params["radius"])
    if kind == "ring":
        return ring_mask(size, cx, cy, params["outer"], params["inner"])
    if kind == "rectangle":
        return rectangle_mask(size, cx, cy, params["width"], params["height"], rot)
    if kind == "triangle":
        return triangle_mask(size, cx, cy, params["circumradius"], rot)
    if kind == "cross":
        return cross_mask(size, cx, cy, params["length"], params["thickness"], rot)
    raise ValueError(f"unknown shape kind {kind!r}")
