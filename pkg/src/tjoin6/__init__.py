"""Workbench for 6-edge-colorings and T-join packings of plane multigraphs."""

from .plane_graph import (
    DegenerateMultigonError,
    Face,
    FaceClassification,
    GraphError,
    Multigon,
    PlaneMultigraph,
    classify,
    parse_plane_graph,
)

__all__ = [
    "DegenerateMultigonError",
    "Face",
    "FaceClassification",
    "GraphError",
    "Multigon",
    "PlaneMultigraph",
    "classify",
    "parse_plane_graph",
]
