"""Plane-graph discharging workbench for defective 3-colorings of planar
graphs without 4- and 5-cycles."""

from .plane_graph import Face, GraphError, PlaneGraph, PlanarCodeError, read_planar_code, write_planar_code

__all__ = ["Face", "GraphError", "PlaneGraph", "PlanarCodeError", "read_planar_code", "write_planar_code"]
__version__ = "0.1.0"
