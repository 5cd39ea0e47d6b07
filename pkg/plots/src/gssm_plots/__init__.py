"""Batch plotting for gssm training and verification artifacts.

Reads only the documented CSV/TOML outputs of a run directory; never
touches checkpoints. Every figure comes with a stats sidecar CSV so the
aggregates behind the pixels can be diffed.
"""

from . import aggregate, frames, render

__all__ = ["aggregate", "frames", "render"]
