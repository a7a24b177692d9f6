"""Exhaustive verification toolkit for orientations without cyclic triangles."""
