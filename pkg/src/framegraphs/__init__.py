"""Frame representations, subdivision decisions and stable-set constructions."""

from ._kernels import JIT_ENABLED
from .errors import (
    BudgetExceeded,
    CertificateError,
    DomainError,
    FramesError,
    NotApplicable,
    ParseError,
    SubdivisionError,
    VertexRangeError,
)
from .graph import Multigraph, SimpleGraph, parse_multigraph, format_multigraph, subdivide
from .decision import decide_ge2_subdivisions, classify_scott, k4_status
from .frames import (
    Frame,
    FrameRepresentation,
    build_ge2_subdivision,
    build_k4_subdivision,
    intersection_graph,
    validate,
)
from .burling import GraphStableSetPair, chromatic_number, construct, next_pair, replay

__version__ = "0.1.0"

__all__ = [
    "JIT_ENABLED",
    "BudgetExceeded",
    "CertificateError",
    "DomainError",
    "FramesError",
    "NotApplicable",
    "ParseError",
    "SubdivisionError",
    "VertexRangeError",
    "Multigraph",
    "SimpleGraph",
    "parse_multigraph",
    "format_multigraph",
    "subdivide",
    "decide_ge2_subdivisions",
    "classify_scott",
    "k4_status",
    "Frame",
    "FrameRepresentation",
    "build_ge2_subdivision",
    "build_k4_subdivision",
    "intersection_graph",
    "validate",
    "GraphStableSetPair",
    "chromatic_number",
    "construct",
    "next_pair",
    "replay",
]
