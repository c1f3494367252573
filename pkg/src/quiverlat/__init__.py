"""Exact quiver series for twist knots and their lattice-path counts."""

from __future__ import annotations

from .lattice import PathModel, count_paths, enumerate_paths, family_path_model, raney, torus_path_model
from .qpoly import QPoly, QRat
from .quiver import AugmentedQuiver, GradedQuiver, SymQuiver, UnreducedQuiver, link, unlink
from .series import Conventions, SequenceReport, compute_sequence, partition_series, ratio_y
from .tower import KnotFamilySpec, build_tower, load_seed

__all__ = [
    "AugmentedQuiver",
    "Conventions",
    "GradedQuiver",
    "KnotFamilySpec",
    "PathModel",
    "QPoly",
    "QRat",
    "SequenceReport",
    "SymQuiver",
    "UnreducedQuiver",
    "build_tower",
    "compute_sequence",
    "count_paths",
    "enumerate_paths",
    "family_path_model",
    "link",
    "load_seed",
    "partition_series",
    "raney",
    "ratio_y",
    "torus_path_model",
    "unlink",
]
__version__ = "0.1.0"
