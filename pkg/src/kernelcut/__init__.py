"""Kernels, exact oracles and hard-instance generators for path and cycle problems."""

from .formats import FormatError, parse_instance, serialize
from .graph import (
    Graph,
    Instance,
    KernelResult,
    LabeledMultigraph,
    StandIn,
    Status,
    Witness,
    check_structure,
)
from .kernel_common import KernelError, WitnessError
from .routing import kernelize, route, supported_cells

__version__ = "0.1.0"

__all__ = [
    "FormatError", "Graph", "Instance", "KernelError", "KernelResult", "LabeledMultigraph",
    "StandIn", "Status", "Witness", "WitnessError", "check_structure", "kernelize",
    "parse_instance", "route", "serialize", "supported_cells",
]
