"""Verification harness: enumerators, the embedding validator, universality
checks, SVG rendering, file I/O, and the acceptance selftest."""

from .families import (
    enumerate_caterpillars,
    enumerate_chorded_cycles,
    enumerate_forests,
    enumerate_trees,
    forest_counts,
    free_tree_counts,
    random_tree,
)
from .render import render_svg
from .selftest import run_all
from .validate import ValidationReport, validate_embedding

__all__ = [
    "ValidationReport",
    "enumerate_caterpillars",
    "enumerate_chorded_cycles",
    "enumerate_forests",
    "enumerate_trees",
    "forest_counts",
    "free_tree_counts",
    "random_tree",
    "render_svg",
    "run_all",
    "validate_embedding",
]
