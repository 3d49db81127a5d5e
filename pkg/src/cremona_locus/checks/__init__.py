"""Verification nodes for the workflow."""

from .pipeline import pipeline_node
from .dimension import dimension_check
from .lines import lines_check
from .point import point_check
from .curves import curves_check
from .anticanonical import anticanonical_check
from .transport import transport_check
from .summary import summary_node

__all__ = [
    "pipeline_node",
    "dimension_check",
    "lines_check",
    "point_check",
    "curves_check",
    "anticanonical_check",
    "transport_check",
    "summary_node",
]
