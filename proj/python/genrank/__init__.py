"""Generalized rank invariants, persistence diagrams and barcodes of diagrams over finite posets."""

import json

from ._core import Diagram, GenrankError, bottleneck, load, loads, matrix_rank


def from_dict(obj):
    """Build a diagram from an already parsed JSON object."""
    return loads(json.dumps(obj))


__all__ = ["Diagram", "GenrankError", "bottleneck", "from_dict", "load", "loads", "matrix_rank"]
