from .coloring import (
    MIN_BETA,
    ColoringInstance,
    cycle_instance,
    instance_from_base,
    make_instance,
    uniform_lists,
)
from .errors import (
    EmptyLineGraphError,
    EmptyListError,
    ImproperPinningError,
    InstanceError,
    InsufficientSlackError,
    InvalidBaseGraphError,
    InvalidCliqueCoverError,
    InvalidListError,
)
from .graphs import BaseGraph, LineGraph, line_graph
from .pinning import (
    ColorClass,
    Element,
    PartialColoring,
    PinnedInstance,
    Residual,
    pin,
    root,
)

__all__ = [
    "MIN_BETA",
    "BaseGraph",
    "ColorClass",
    "ColoringInstance",
    "Element",
    "EmptyLineGraphError",
    "EmptyListError",
    "ImproperPinningError",
    "InstanceError",
    "InsufficientSlackError",
    "InvalidBaseGraphError",
    "InvalidCliqueCoverError",
    "InvalidListError",
    "LineGraph",
    "PartialColoring",
    "PinnedInstance",
    "Residual",
    "cycle_instance",
    "instance_from_base",
    "line_graph",
    "make_instance",
    "pin",
    "root",
    "uniform_lists",
]
