"""Bounding-box attribution maps for weakly supervised segmentation.

The library trains a small two-stage shape detector on synthetic scenes,
optimizes perturbation masks that preserve its per-proposal predictions,
converts those masks into foreground/background/ignore pseudo labels, and
trains segmentation networks on them. Everything runs on CPU at desk scale.
"""

__version__ = "0.1.0"
