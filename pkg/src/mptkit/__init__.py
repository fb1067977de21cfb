"""Max point-tolerance graphs: representations, orders, optimisation,
geometry and membership certificates, with exact arithmetic throughout."""

from .errors import (
    FormatError,
    InputError,
    MptError,
    OracleLimitError,
    OrderViolationError,
    PreconditionError,
)
from .graph import Graph, graph_from_edge_list
from .representations import (
    IntervalRepresentation,
    LinearLSystem,
    LShape,
    MptRepresentation,
    PointedInterval,
    mpt_adjacency,
    normalize,
)

__all__ = [
    "FormatError",
    "Graph",
    "InputError",
    "IntervalRepresentation",
    "LShape",
    "LinearLSystem",
    "MptError",
    "MptRepresentation",
    "OracleLimitError",
    "OrderViolationError",
    "PointedInterval",
    "PreconditionError",
    "graph_from_edge_list",
    "mpt_adjacency",
    "normalize",
]

__version__ = "0.1.0"
